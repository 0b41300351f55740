//! Every verification suite at a small size.

use monideal::verify::{run_all, VerifyOptions};

fn main() -> monideal::Result<()> {
    let opts = VerifyOptions { trials: 30, seed: 5, ..VerifyOptions::default() };
    for r in run_all(&opts)? {
        let status = if r.passed() { "ok" } else { "FAILED" };
        println!("{:<16} {status:<6} {} checks, {} skipped", r.suite, r.checks, r.skipped);
        for f in &r.failures {
            println!("    {f}");
        }
    }
    Ok(())
}
