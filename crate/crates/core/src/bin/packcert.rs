fn main() {
    std::process::exit(packcert::cli::main_with_args(std::env::args_os()));
}
