fn main() {
    std::process::exit(lyco::cli::main_with_args(std::env::args_os()));
}
