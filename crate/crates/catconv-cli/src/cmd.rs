//! Subcommand implementations. Each returns the process exit code or a
//! [`CliError`] that the caller maps to one.

use std::fmt::Display;
use std::io::Write;

use catconv::bijection::{
    chi, chi_inv, psi, psi_inv, theorem9_backward, theorem9_forward, PairE, PairO,
};
use catconv::enumerate::{
    enumerate_balanced_with_cap, enumerate_dyck_with_cap, enumerate_even_zeroed_with_cap,
    enumerate_paths_with_cap, DEFAULT_MAX_PARAMETER, DEFAULT_MAX_PATH_LEN,
};
use catconv::path::{BalancedPath, DyckPath, Path, SignedSeq};
use catconv::triangle::{triangle as build_triangle, TriangleGrid};
use catconv::verify::{verify_range_with_caps, VerificationReport};

use crate::args::{
    DecomposeArgs, EnumerateArgs, Family, MapKind, RenderArgs, RenderWhat, ReportFormat,
    TriangleArgs, TriangleFormat, VerifyArgs,
};
use crate::{caps_for, exit_code_for_reports, CliError};

pub(crate) fn verify<O: Write>(
    args: VerifyArgs,
    budget: Option<usize>,
    out: &mut O,
) -> Result<i32, CliError> {
    let caps = caps_for(budget);
    let (from, to) = args
        .range
        .or(args.n.map(|n| (n, n)))
        .expect("clap requires an index or a range");
    let reports = verify_range_with_caps(args.identity, from, to, args.mode, &caps)?;
    match args.format {
        ReportFormat::Table => write_table(&reports, out)?,
        ReportFormat::Json => {
            let rendered =
                serde_json::to_string_pretty(&reports).expect("report serialization cannot fail");
            writeln!(out, "{rendered}")?;
        }
        ReportFormat::Csv => write_csv(&reports, out)?,
    }
    Ok(exit_code_for_reports(&reports))
}

fn report_cells(report: &VerificationReport) -> [String; 7] {
    [
        report.identity.name().to_string(),
        report.n.to_string(),
        report.mode.name().to_string(),
        report.expected.to_string(),
        report.actual.to_string(),
        if report.passed { "pass" } else { "FAIL" }.to_string(),
        report.elapsed.as_millis().to_string(),
    ]
}

const REPORT_COLUMNS: [&str; 7] = [
    "identity",
    "n",
    "mode",
    "expected",
    "actual",
    "passed",
    "elapsed_ms",
];

fn write_table<O: Write>(reports: &[VerificationReport], out: &mut O) -> Result<(), CliError> {
    let rows: Vec<[String; 7]> = reports.iter().map(report_cells).collect();
    let mut widths: Vec<usize> = REPORT_COLUMNS.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (width, cell) in widths.iter_mut().zip(row.iter()) {
            *width = (*width).max(cell.len());
        }
    }
    let write_row = |out: &mut O, cells: &[&str]| -> std::io::Result<()> {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{cell:<width$}", width = widths[i]));
        }
        writeln!(out, "{}", line.trim_end())
    };
    write_row(out, &REPORT_COLUMNS)?;
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        write_row(out, &cells)?;
    }
    for report in reports.iter().filter(|r| !r.passed) {
        if let Some(witness) = &report.witness {
            for line in witness {
                writeln!(out, "witness({}, n={}): {line}", report.identity, report.n)?;
            }
        }
    }
    Ok(())
}

fn write_csv<O: Write>(reports: &[VerificationReport], out: &mut O) -> Result<(), CliError> {
    writeln!(out, "{}", REPORT_COLUMNS.join(","))?;
    for report in reports {
        let mut cells = report_cells(report);
        cells[5] = report.passed.to_string();
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

pub(crate) fn enumerate<O: Write>(
    args: EnumerateArgs,
    budget: Option<usize>,
    out: &mut O,
) -> Result<i32, CliError> {
    let len_cap = budget.unwrap_or(DEFAULT_MAX_PATH_LEN);
    let param_cap = budget.map_or(DEFAULT_MAX_PARAMETER, |b| b / 2);
    let limit = args.limit.unwrap_or(usize::MAX);
    match args.family {
        Family::Paths => write_lines(enumerate_paths_with_cap(args.n, len_cap)?, limit, out),
        Family::Balanced => {
            write_lines(enumerate_balanced_with_cap(args.n, param_cap)?, limit, out)
        }
        Family::Dyck => write_lines(enumerate_dyck_with_cap(args.n, param_cap)?, limit, out),
        Family::EvenZeroed => {
            write_lines(enumerate_even_zeroed_with_cap(args.n, param_cap)?, limit, out)
        }
    }?;
    Ok(0)
}

fn write_lines<O: Write, T: Display>(
    items: impl Iterator<Item = T>,
    limit: usize,
    out: &mut O,
) -> Result<(), CliError> {
    for item in items.take(limit) {
        writeln!(out, "{item}")?;
    }
    Ok(())
}

pub(crate) fn decompose<O: Write>(args: DecomposeArgs, out: &mut O) -> Result<i32, CliError> {
    match (args.map, args.invert) {
        (MapKind::Chi, false) => {
            let balanced = BalancedPath::parse(single_input(&args.input)?)?;
            writeln!(out, "{}", chi(&balanced))?;
        }
        (MapKind::Chi, true) => {
            let seq: SignedSeq = args.input.join(" ").parse()?;
            writeln!(out, "{}", chi_inv(&seq))?;
        }
        (MapKind::Psi, false) => {
            let dyck = DyckPath::parse(single_input(&args.input)?)?;
            writeln!(out, "{}", psi(&dyck)?)?;
        }
        (MapKind::Psi, true) => {
            let seq: SignedSeq = args.input.join(" ").parse()?;
            writeln!(out, "{}", psi_inv(&seq)?)?;
        }
        (MapKind::Theorem9, false) => {
            let (first, second) = pair_input(&args.input)?;
            let image = theorem9_forward(&PairE::new(first, second)?);
            writeln!(out, "{}", image.first())?;
            writeln!(out, "{}", image.second())?;
        }
        (MapKind::Theorem9, true) => {
            let (first, second) = pair_input(&args.input)?;
            let image = theorem9_backward(&PairO::new(first, second)?);
            writeln!(out, "{}", image.first())?;
            writeln!(out, "{}", image.second())?;
        }
    }
    Ok(0)
}

fn single_input(input: &[String]) -> Result<&str, CliError> {
    match input {
        [only] => Ok(only),
        _ => Err(CliError::Usage(format!(
            "this map takes exactly one --input value, got {}",
            input.len()
        ))),
    }
}

fn pair_input(input: &[String]) -> Result<(BalancedPath, BalancedPath), CliError> {
    match input {
        [first, second] => Ok((BalancedPath::parse(first)?, BalancedPath::parse(second)?)),
        _ => Err(CliError::Usage(format!(
            "theorem9 takes exactly two --input values, got {}",
            input.len()
        ))),
    }
}

pub(crate) fn triangle<O: Write>(args: TriangleArgs, out: &mut O) -> Result<i32, CliError> {
    let grid = build_triangle(args.rows)?;
    match args.format {
        TriangleFormat::Table => {
            for t in 0..=grid.extent() {
                let labels: Vec<String> = grid
                    .row_nodes(t)
                    .expect("row in range")
                    .iter()
                    .map(|(_, label)| label.to_string())
                    .collect();
                writeln!(out, "t={t:>3}: {}", labels.join(" "))?;
            }
        }
        TriangleFormat::Json => {
            let rows: Vec<serde_json::Value> = (0..=grid.extent())
                .map(|t| {
                    let nodes: Vec<serde_json::Value> = grid
                        .row_nodes(t)
                        .expect("row in range")
                        .iter()
                        .map(|(h, label)| {
                            serde_json::json!({
                                "h": h,
                                "label": label.to_string(),
                                "forbidden": TriangleGrid::is_forbidden(t, *h),
                            })
                        })
                        .collect();
                    serde_json::json!({ "t": t, "nodes": nodes })
                })
                .collect();
            let document = serde_json::json!({ "extent": grid.extent(), "rows": rows });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&document).expect("grid serialization cannot fail")
            )?;
        }
    }
    Ok(0)
}

pub(crate) fn render<O: Write>(args: RenderArgs, _out: &mut O) -> Result<i32, CliError> {
    let document = match args.what {
        RenderWhat::Decomposition => {
            let input = args.input.as_deref().ok_or_else(|| {
                CliError::Usage("--what decomposition requires --input".to_string())
            })?;
            let path = Path::parse(input)?;
            crate::svg::render_decomposition(&path, args.map)?
        }
        RenderWhat::Triangle => {
            let rows = args
                .rows
                .ok_or_else(|| CliError::Usage("--what triangle requires --rows".to_string()))?;
            let grid = build_triangle(rows)?;
            crate::svg::render_triangle(&grid, args.hide_forbidden)
        }
    };
    std::fs::write(&args.out, document)?;
    Ok(0)
}
