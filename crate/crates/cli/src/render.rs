//! Plain-text layouts: CSV tables and level diagrams with one column per
//! Fock sector, highest level at the top.

use std::fmt::Write as _;

pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.iter().map(|c| quote(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

fn quote(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// One diagram row: an energy label and the cell text for each sector.
pub struct DiagramRow {
    pub label: String,
    pub cells: Vec<String>,
}

pub fn diagram(title: &str, sectors: usize, rows: &[DiagramRow]) -> String {
    let label_width = rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(0).max("E".len());
    let cell_width = rows
        .iter()
        .flat_map(|r| r.cells.iter().map(|c| c.chars().count()))
        .max()
        .unwrap_or(0)
        .max(4);
    let mut out = String::new();
    let _ = writeln!(out, "{title}");
    let mut head = format!("{:>label_width$} |", "E");
    for mu in 0..sectors {
        let _ = write!(head, " {:^cell_width$}", format!("F{mu}"));
    }
    let _ = writeln!(out, "{}", head.trim_end());
    let _ = writeln!(out, "{}-+{}", "-".repeat(label_width), "-".repeat((cell_width + 1) * sectors));
    for row in rows.iter().rev() {
        let mut line = format!("{:>label_width$} |", row.label);
        for cell in &row.cells {
            let _ = write!(line, " {cell:^cell_width$}");
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

pub fn key_values(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in pairs {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_cells_with_commas() {
        let text = csv(&["a", "b"], [vec!["1".to_string(), "x,y".to_string()]]);
        assert_eq!(text, "a,b\n1,\"x,y\"\n");
    }

    #[test]
    fn diagram_puts_highest_row_first() {
        let rows = [
            DiagramRow { label: "0".into(), cells: vec!["0".into(), String::new()] },
            DiagramRow { label: "3/2".into(), cells: vec![String::new(), "1".into()] },
        ];
        let text = diagram("t", 2, &rows);
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "t");
        assert!(lines[1].contains("F0") && lines[1].contains("F1"));
        assert!(lines[3].starts_with("3/2"));
        assert!(lines[4].trim_start().starts_with('0'));
    }
}
