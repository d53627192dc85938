//! Plain-text Sudoku grids: `n` on the first line, then `n²` lines of `n²`
//! space-separated integers. Blank lines are ignored.

use std::fmt::Write as _;

use dspm_core::SudokuGrid;

use crate::error::CliError;

pub fn parse_grid(text: &str) -> Result<SudokuGrid, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or(CliError::Parse {
        line: 1,
        message: "empty grid file".into(),
    })?;
    let n: usize = header.parse().map_err(|_| CliError::Parse {
        line: first,
        message: format!("bad block order {header:?}"),
    })?;
    if n == 0 || n > 15 {
        return Err(CliError::Parse {
            line: first,
            message: format!("block order {n} out of range"),
        });
    }
    let side = n * n;
    let mut rows = Vec::with_capacity(side);
    for (line, text) in lines {
        let row = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| CliError::Parse {
                    line,
                    message: format!("bad entry {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != side {
            return Err(CliError::Parse {
                line,
                message: format!("expected {side} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != side {
        return Err(CliError::Parse {
            line: first,
            message: format!("expected {side} rows, found {}", rows.len()),
        });
    }
    Ok(SudokuGrid::from_rows(n, &rows)?)
}

pub fn format_grid(grid: &SudokuGrid) -> String {
    let mut out = format!("{}\n", grid.n());
    for row in grid.rows() {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}
