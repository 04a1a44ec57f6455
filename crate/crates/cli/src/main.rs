use std::io::Write;
use std::panic;
use std::process::ExitCode;

use enumgeom_cli::{run, EXIT_INTERNAL};

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let result =
        panic::catch_unwind(|| run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock()));
    let code = result.unwrap_or_else(|_| {
        let _ = writeln!(std::io::stderr(), "internal error: the engine panicked");
        EXIT_INTERNAL
    });
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
