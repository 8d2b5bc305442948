use std::process::ExitCode;

fn workers() -> Result<Option<usize>, String> {
    match std::env::var("TCLAB_WORKERS") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(format!("TCLAB_WORKERS must be a positive integer, got '{v}'")),
        },
    }
}

fn main() -> ExitCode {
    match workers() {
        Ok(Some(n)) => {
            rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("pool is configured once");
        }
        Ok(None) => {}
        Err(msg) => {
            print!("{}", tclab_cli::report::error_json("usage", &msg, serde_json::json!({})));
            return ExitCode::from(tclab_cli::USAGE_EXIT as u8);
        }
    }
    let (code, out) = tclab_cli::run(std::env::args_os());
    print!("{out}");
    ExitCode::from(code as u8)
}
