fn main() -> std::process::ExitCode {
    spheretopo::cli::main()
}
