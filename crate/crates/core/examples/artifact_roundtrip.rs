// JSON artifacts: emit with `construct`, check with `verify` / `certify`.

use tricover::cli::run as cli;

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli(
        std::iter::once("tricover").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

pub fn run() -> Vec<i32> {
    let dir = std::env::temp_dir().join(format!("tricover-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut codes = Vec::new();
    for (name, args, check) in [
        (
            "kcover.json",
            vec!["construct", "--family", "kcover2d", "--n", "7", "--k", "3"],
            "verify",
        ),
        (
            "cover333.json",
            vec!["construct", "--family", "cover333"],
            "verify",
        ),
        (
            "mass.json",
            vec!["construct", "--family", "mass2d", "--n", "10"],
            "certify",
        ),
    ] {
        let (_, json) = call(&args);
        let path = dir.join(name);
        std::fs::write(&path, json).unwrap();
        let (code, report) = call(&[check, "--in", path.to_str().unwrap()]);
        println!("{name}: {check} exit {code}\n{report}");
        codes.push(code);
    }
    std::fs::remove_dir_all(&dir).unwrap();
    codes
}

fn main() {
    assert!(run().iter().all(|&c| c == 0));
}
