fn main() {
    std::process::exit(hopflab::cli::main_with_args(std::env::args_os()));
}
