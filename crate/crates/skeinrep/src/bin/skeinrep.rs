fn main() {
    std::process::exit(skeinrep::cli::run(std::env::args_os()));
}
