fn main() {
    std::process::exit(zetatab::cli::run(std::env::args_os()));
}
