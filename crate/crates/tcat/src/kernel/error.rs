//! Kernel errors and their display format.
//!
//! Every error renders on a single line as
//!
//! ```text
//! file:line:col: error[Category]: message
//! ```
//!
//! so tooling can grep for the category. The set of categories is fixed;
//! new failure modes must pick one of these.

use std::fmt;

use crate::surface::{ParseError, SrcSpan};

/// Closed set of error categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    UnboundName,
    NotAFunction,
    NotAPair,
    TypeMismatch,
    UniverseError,
    ExpectedType,
    IdEndpointMismatch,
    DuplicateName,
}

impl Category {
    pub fn label(self) -> &'static str {
        match self {
            Category::UnboundName => "UnboundName",
            Category::NotAFunction => "NotAFunction",
            Category::NotAPair => "NotAPair",
            Category::TypeMismatch => "TypeMismatch",
            Category::UniverseError => "UniverseError",
            Category::ExpectedType => "ExpectedType",
            Category::IdEndpointMismatch => "IdEndpointMismatch",
            Category::DuplicateName => "DuplicateName",
        }
    }
}

/// A type-checking failure, with any types involved already rendered to
/// strings so the error is self-contained.
#[derive(Debug, Clone)]
pub struct TypeError {
    pub span: SrcSpan,
    pub category: Category,
    pub message: String,
    /// The top-level declaration being checked when the error arose.
    pub decl: Option<String>,
}

impl TypeError {
    pub fn new(span: SrcSpan, category: Category, message: impl Into<String>) -> Self {
        TypeError { span, category, message: message.into(), decl: None }
    }
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: error[{}]: {}", self.span, self.category.label(), self.message)?;
        if let Some(decl) = &self.decl {
            write!(f, " (while checking `{decl}`)")?;
        }
        Ok(())
    }
}

impl std::error::Error for TypeError {}

/// Any failure the kernel can report while loading source.
#[derive(Debug, Clone)]
pub enum KernelError {
    Parse(ParseError),
    Type(TypeError),
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelError::Parse(e) => e.fmt(f),
            KernelError::Type(e) => e.fmt(f),
        }
    }
}

impl From<ParseError> for KernelError {
    fn from(e: ParseError) -> Self {
        KernelError::Parse(e)
    }
}

impl From<TypeError> for KernelError {
    fn from(e: TypeError) -> Self {
        KernelError::Type(e)
    }
}

impl std::error::Error for KernelError {}
