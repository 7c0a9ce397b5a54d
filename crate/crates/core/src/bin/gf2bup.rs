fn main() {
    gf2bup::cli::init_thread_pool();
    let code = gf2bup::cli::run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
