fn main() {
    std::process::exit(rainbow_census::cli::run(std::env::args_os()));
}
