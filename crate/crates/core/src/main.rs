use std::io::Write;

fn main() {
    orthochroma::cli::configure_threads();
    let out = orthochroma::cli::run(std::env::args_os());
    std::io::stdout().write_all(&out.stdout).ok();
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
