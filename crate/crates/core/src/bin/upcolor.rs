fn main() {
    std::process::exit(upcolor::cli::run(std::env::args_os()));
}
