fn main() {
    std::process::exit(gln_casimir::cli::main_with_args(std::env::args_os()));
}
