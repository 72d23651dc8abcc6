use ga_core::{cayley_table_with, Execution, GaError, Signature};
use serde_json::json;

use crate::format::OutputFormat;

/// Multiplication table of the basis blades, rows times columns, in
/// canonical blade order. Limited to dimension 6.
pub fn emit_cayley(sig: Signature, format: OutputFormat, exec: Execution) -> Result<String, GaError> {
    let table = cayley_table_with(sig, exec)?;
    let header: Vec<String> = table.blades().iter().map(|b| b.to_string()).collect();
    let cells: Vec<Vec<String>> = table
        .rows()
        .map(|row| row.iter().map(|c| c.to_string()).collect())
        .collect();
    Ok(match format {
        OutputFormat::Json => json!({
            "signature": [sig.p(), sig.q()],
            "blades": header,
            "table": cells,
        })
        .to_string(),
        OutputFormat::Text => {
            let width = cells
                .iter()
                .flatten()
                .chain(&header)
                .map(String::len)
                .max()
                .unwrap_or(1);
            let mut out = format!("{sig}\n{:>width$} |", "");
            for h in &header {
                out += &format!(" {h:>width$}");
            }
            out += &format!("\n{}-+{}\n", "-".repeat(width), "-".repeat((width + 1) * header.len()));
            for (h, row) in header.iter().zip(&cells) {
                out += &format!("{h:>width$} |");
                for c in row {
                    out += &format!(" {c:>width$}");
                }
                out.push('\n');
            }
            out
        }
    })
}
