fn main() {
    std::process::exit(fsys::cli::main_with_args(std::env::args_os()));
}
