use std::io::{IsTerminal, Write};

fn main() {
    let (code, out) = p3dist::cli::run_command(std::env::args_os());
    print!("{out}");
    let _ = std::io::stdout().flush();
    if out.contains("\"kind\": \"verification\"") {
        let colour = std::env::var_os("NO_COLOR").is_none() && std::io::stderr().is_terminal();
        let (mark, paint) = if code == 0 { ("all checks passed", "32") } else { ("some checks failed", "31") };
        if colour {
            eprintln!("\x1b[{paint}m{mark}\x1b[0m");
        } else {
            eprintln!("{mark}");
        }
    }
    std::process::exit(code);
}
