fn main() {
    std::process::exit(matchcover::cli::main_from_env());
}
