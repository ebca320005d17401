fn main() {
    std::process::exit(gridthresh::cli::run_from_env());
}
