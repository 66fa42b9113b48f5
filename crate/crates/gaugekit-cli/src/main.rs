fn main() {
    std::process::exit(gaugekit_cli::run());
}
