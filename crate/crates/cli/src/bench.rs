use std::io::Write;
use std::time::Instant;

use eulerec::identities;

use crate::sequences::Resolved;
use crate::CliError;

/// Times the recurrence solver against the oracle; `Ok(false)` if the tables differ.
pub fn run(seq: Resolved, max_n: u64, mut out: impl Write) -> Result<bool, CliError> {
    let target = seq.recurrence_target().ok_or_else(|| {
        CliError::Usage(format!(
            "bench supports p, q, sigma and r_k; got '{}'",
            seq.seq
        ))
    })?;
    let key = seq.key();

    let start = Instant::now();
    let (solved, stats) = identities::solve_with_stats(target, max_n)
        .map_err(|e| CliError::Failed(format!("recurrence for {key} failed: {e}")))?;
    let recurrence_time = start.elapsed();

    let start = Instant::now();
    let oracle = seq.oracle(max_n);
    let oracle_time = start.elapsed();

    let n_root_n = (max_n as f64) * (max_n as f64).sqrt();
    writeln!(out, "bench {key} for n = 0..={max_n}")?;
    writeln!(
        out,
        "recurrence  {recurrence_time:>12.2?}  total terms {}, max terms per n {}, n*sqrt(n) = {n_root_n:.0}",
        stats.total_terms(),
        stats.max_terms()
    )?;
    writeln!(out, "oracle      {oracle_time:>12.2?}")?;

    let mismatch = solved
        .values()
        .iter()
        .zip(&oracle)
        .position(|(a, b)| a != b);
    let identical = mismatch.is_none() && solved.values().len() == oracle.len();
    if identical {
        if oracle.len() <= 10 {
            let shown: Vec<String> = oracle.iter().map(|v| v.to_string()).collect();
            writeln!(out, "tables [{}] identical", shown.join(", "))?;
        } else {
            writeln!(out, "tables identical ({} values)", oracle.len())?;
        }
    } else {
        let n = mismatch.unwrap_or(oracle.len().min(solved.values().len()));
        writeln!(out, "tables differ first at n = {n}")?;
    }
    out.flush()?;
    Ok(identical)
}
