fn main() {
    std::process::exit(ecdecomp::cli::run(std::env::args_os()));
}
