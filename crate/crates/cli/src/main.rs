fn main() {
    std::process::exit(scrolls_cli::run(std::env::args_os()));
}
