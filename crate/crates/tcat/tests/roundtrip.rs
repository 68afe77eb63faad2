//! Printer/parser roundtrips: printing any term and parsing the result
//! must give back the same term up to alpha-equality — once for every
//! declaration in the shipped corpus, and once property-based over
//! randomly generated terms.

mod common;

use proptest::prelude::*;

use common::{load_corpus, with_big_stack};
use tcat::kernel::core_to_raw;
use tcat::surface::{alpha_eq, parse_term, print_term, RawNode, RawTerm, SrcSpan};

fn assert_roundtrips(what: &str, t: &RawTerm) {
    let printed = print_term(t);
    let back = parse_term("<roundtrip>", &printed)
        .unwrap_or_else(|e| panic!("{what}: printed form does not parse: {e}\n{printed}"));
    assert!(
        alpha_eq(t, &back),
        "{what}: print-then-parse is not alpha-identity\nprinted: {printed}"
    );
}

#[test]
fn every_corpus_declaration_roundtrips() {
    with_big_stack(|| {
        let (genv, _) = load_corpus();
        assert!(!genv.decls().is_empty());
        for d in genv.decls() {
            let mut names = Vec::new();
            let ty = core_to_raw(&genv, &mut names, &d.ty);
            assert_roundtrips(&format!("{} (type)", d.name), &ty);
            if let Some(body) = &d.body {
                let mut names = Vec::new();
                let b = core_to_raw(&genv, &mut names, body);
                assert_roundtrips(&format!("{} (body)", d.name), &b);
            }
        }
    })
}

fn raw(node: RawNode) -> RawTerm {
    RawTerm::new(SrcSpan::synthetic(), node)
}

fn var_name() -> impl Strategy<Value = String> {
    proptest::sample::select(&["x", "y", "z", "f", "g", "aa"][..]).prop_map(str::to_string)
}

fn binder_name() -> impl Strategy<Value = String> {
    proptest::sample::select(&["x", "y", "z", "f", "_"][..]).prop_map(str::to_string)
}

fn arb_term() -> impl Strategy<Value = RawTerm> {
    let leaf = prop_oneof![
        var_name().prop_map(|x| raw(RawNode::Var(x))),
        (0u32..4).prop_map(|l| raw(RawNode::Universe(l))),
        Just(raw(RawNode::Empty)),
        Just(raw(RawNode::Unit)),
        Just(raw(RawNode::Star)),
        Just(raw(RawNode::Bool)),
        Just(raw(RawNode::B0)),
        Just(raw(RawNode::B1)),
    ];
    leaf.prop_recursive(6, 64, 4, |t| {
        let b = || t.clone().prop_map(Box::new);
        prop_oneof![
            (binder_name(), b(), b()).prop_map(|(x, a, c)| raw(RawNode::Pi(x, a, c))),
            (binder_name(), b(), b()).prop_map(|(x, a, c)| raw(RawNode::Sigma(x, a, c))),
            (binder_name(), b()).prop_map(|(x, body)| raw(RawNode::Lam(x, body))),
            (b(), b()).prop_map(|(f, a)| raw(RawNode::App(f, a))),
            (b(), b()).prop_map(|(a, c)| raw(RawNode::Pair(a, c))),
            b().prop_map(|a| raw(RawNode::Fst(a))),
            b().prop_map(|a| raw(RawNode::Snd(a))),
            (b(), b(), b()).prop_map(|(a, l, r)| raw(RawNode::IdTy(a, l, r))),
            (b(), b()).prop_map(|(a, x)| raw(RawNode::Refl(a, x))),
            (b(), b(), b(), b(), b(), b()).prop_map(|(ty, base, motive, case, endpoint, proof)| {
                raw(RawNode::J { ty, base, motive, case, endpoint, proof })
            }),
            (b(), b()).prop_map(|(c, s)| raw(RawNode::ElimEmpty(c, s))),
            (b(), b(), b()).prop_map(|(c, u, s)| raw(RawNode::ElimUnit(c, u, s))),
            (b(), b(), b(), b()).prop_map(|(c, c0, c1, s)| raw(RawNode::ElimBool(c, c0, c1, s))),
            (b(), b()).prop_map(|(tm, ty)| raw(RawNode::Ann(tm, ty))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, ..ProptestConfig::default() })]

    #[test]
    fn generated_terms_roundtrip(t in arb_term()) {
        let printed = print_term(&t);
        let back = parse_term("<prop>", &printed)
            .map_err(|e| TestCaseError::fail(format!("printed form does not parse: {e}\n{printed}")))?;
        prop_assert!(alpha_eq(&t, &back), "not alpha-identical\nprinted: {printed}");
    }
}
