fn main() {
    std::process::exit(fraccover::cli::run(std::env::args_os()));
}
