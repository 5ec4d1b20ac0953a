fn main() {
    std::process::exit(hermite_multisect::cli::run());
}
