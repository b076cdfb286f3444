use std::io::Write;

use crate::output::{csv_io, csv_writer, JsonArray, OutputRecord, Provenance};
use crate::sequences::Resolved;
use crate::{CliError, Format, Method};

/// Prints the requested rows; `Ok(false)` when the two methods disagree.
pub fn run(
    seq: Resolved,
    max_n: u64,
    method: Method,
    format: Format,
    out: impl Write,
) -> Result<bool, CliError> {
    let key = seq.key();
    let recurrence = match method {
        Method::Oracle => None,
        Method::Recurrence | Method::Both => Some(seq.recurrence(max_n).ok_or_else(|| {
            CliError::Usage(format!(
                "sequence '{}' has no recurrence path; use --method oracle",
                seq.seq
            ))
        })?),
    };
    let oracle = match method {
        Method::Recurrence => None,
        Method::Oracle | Method::Both => Some(seq.oracle(max_n)),
    };
    let first = seq.seq.first_n();
    let mut mismatches = Vec::new();

    match format {
        Format::Csv => {
            let mut w = csv_writer(out);
            let mut header = vec!["key", "n", "value"];
            if method == Method::Both {
                header.push("value_oracle");
            }
            w.write_record(&header).map_err(csv_io)?;
            for n in first..=max_n {
                let i = n as usize;
                let mut row = vec![key.clone(), n.to_string()];
                match (&recurrence, &oracle) {
                    (Some(rec), Some(orc)) => {
                        row.push(rec[i].to_string());
                        row.push(orc[i].to_string());
                        if rec[i] != orc[i] {
                            mismatches.push(n);
                        }
                    }
                    (Some(values), None) | (None, Some(values)) => row.push(values[i].to_string()),
                    (None, None) => unreachable!("at least one method runs"),
                }
                w.write_record(&row).map_err(csv_io)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let mut array = JsonArray::new(out)?;
            for n in first..=max_n {
                let i = n as usize;
                for (values, provenance) in [
                    (&recurrence, Provenance::Recurrence),
                    (&oracle, Provenance::Oracle),
                ] {
                    if let Some(values) = values {
                        array.push(&OutputRecord {
                            key: &key,
                            n,
                            value: values[i].to_string(),
                            provenance,
                        })?;
                    }
                }
                if let (Some(rec), Some(orc)) = (&recurrence, &oracle) {
                    if rec[i] != orc[i] {
                        mismatches.push(n);
                    }
                }
            }
            array.finish()?;
        }
    }

    for n in &mismatches {
        let i = *n as usize;
        eprintln!(
            "mismatch for {key} at n = {n}: recurrence {} vs oracle {}",
            recurrence
                .as_ref()
                .map_or(String::new(), |v| v[i].to_string()),
            oracle.as_ref().map_or(String::new(), |v| v[i].to_string())
        );
    }
    Ok(mismatches.is_empty())
}
