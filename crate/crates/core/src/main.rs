use std::io::IsTerminal;

fn main() {
    let color = std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal();
    let code = structdet::cli::run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        color,
    );
    std::process::exit(code);
}
