use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = comalg_cli::run_command(&argv, &mut out);
    out.flush().expect("flush stdout");
    std::process::exit(code);
}
