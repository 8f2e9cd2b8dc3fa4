fn main() {
    std::process::exit(qlattice::cli::run(std::env::args_os()));
}
