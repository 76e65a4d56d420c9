fn main() {
    std::process::exit(bentspectra::cli::main());
}
