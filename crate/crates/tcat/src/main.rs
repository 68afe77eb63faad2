use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    // Deeply nested proof terms can need more stack than the default, so
    // run everything on a worker thread with a generous allocation.
    let handle = std::thread::Builder::new()
        .name("tcat".to_string())
        .stack_size(256 * 1024 * 1024)
        .spawn(move || tcat::cli::run(&args))
        .expect("failed to spawn worker thread");
    match handle.join() {
        Ok(code) => ExitCode::from(u8::try_from(code).unwrap_or(1)),
        // The worker panicked; its message is already on stderr.
        Err(_) => ExitCode::from(101),
    }
}
