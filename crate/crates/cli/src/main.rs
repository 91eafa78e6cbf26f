fn main() {
    std::process::exit(grp_cli::run_from_env());
}
