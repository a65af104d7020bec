fn main() {
    std::process::exit(grundy_core::cli::main_with_args(std::env::args_os()));
}
