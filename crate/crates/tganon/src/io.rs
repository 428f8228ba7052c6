//! File formats.
//!
//! Temporal edge list: the first non-comment line is `n=<int> T=<int>`, every
//! further line is `t<TAB>u<TAB>v` with 0-based integers, and lines starting
//! with `#` are comments. Duplicate records and reversed endpoints collapse
//! to one undirected edge.
//!
//! Labeled edge list: the first non-comment line is `T=<int>` and records are
//! `t<TAB>label<TAB>label`. Labels get dense indices in order of first
//! appearance; the mapping is written as a sidecar `node<TAB>label` table.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use tganon_core::anonymizer::AnonymityGrouping;
use tganon_core::metrics::SliceUtility;
use tganon_core::{DegreeMatrix, Edge, TemporalGraph};

use crate::{Error, Result};

/// Content lines with their 1-based line numbers.
fn content_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(Error::Stream(e))),
            Ok(line) => {
                let trimmed = line.trim();
                if trimmed.is_empty() || trimmed.starts_with('#') {
                    None
                } else {
                    Some(Ok((i + 1, trimmed.to_owned())))
                }
            }
        })
}

fn header_value(line: usize, field: &str, key: &str) -> Result<usize> {
    field
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| Error::parse(line, format!("expected `{key}=<int>`, found `{field}`")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("`{field}` is not a non-negative integer")))
}

fn parse_index(line: usize, what: &str, field: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("{what} `{field}` is not a non-negative integer")))
}

fn record_fields(line: usize, text: &str) -> Result<[String; 3]> {
    let fields: Vec<&str> = text.split('\t').map(str::trim).collect();
    match fields.as_slice() {
        [t, u, v] => Ok([t.to_string(), u.to_string(), v.to_string()]),
        _ => Err(Error::parse(
            line,
            format!("expected 3 tab-separated fields, found {}", fields.len()),
        )),
    }
}

fn assemble(n: usize, slices: Vec<Vec<Edge>>) -> Result<TemporalGraph> {
    Ok(TemporalGraph::new(n, slices)?)
}

/// Parses a temporal edge list.
pub fn read_edgelist<R: BufRead>(reader: R) -> Result<TemporalGraph> {
    let mut lines = content_lines(reader);
    let (line, header) = lines
        .next()
        .transpose()?
        .ok_or_else(|| Error::parse(0, "missing `n=<int> T=<int>` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n_field, t_field] = fields.as_slice() else {
        return Err(Error::parse(line, "expected header `n=<int> T=<int>`"));
    };
    let n = header_value(line, n_field, "n")?;
    let t_count = header_value(line, t_field, "T")?;
    if t_count == 0 {
        return Err(Error::parse(line, "T must be at least 1"));
    }
    let mut slices: Vec<Vec<Edge>> = vec![Vec::new(); t_count];
    for entry in lines {
        let (line, text) = entry?;
        let [t, u, v] = record_fields(line, &text)?;
        let t = parse_index(line, "slice", &t)?;
        let u = parse_index(line, "node", &u)?;
        let v = parse_index(line, "node", &v)?;
        if t >= t_count {
            return Err(Error::parse(line, format!("slice {t} out of range (T={t_count})")));
        }
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("node {} out of range (n={n})", u.max(v))));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop on node {u}")));
        }
        slices[t].push((u, v));
    }
    assemble(n, slices)
}

/// Writes a temporal edge list; slices and edges come out sorted.
pub fn write_edgelist<W: Write>(g: &TemporalGraph, mut w: W) -> Result<()> {
    writeln!(w, "n={} T={}", g.node_count(), g.slice_count())?;
    for (t, slice) in g.slices().iter().enumerate() {
        for &(u, v) in slice {
            writeln!(w, "{t}\t{u}\t{v}")?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Labeled edge list plus its node-label table.
pub fn read_labeled_edgelist<R: BufRead>(reader: R) -> Result<(TemporalGraph, Vec<String>)> {
    let mut lines = content_lines(reader);
    let (line, header) = lines
        .next()
        .transpose()?
        .ok_or_else(|| Error::parse(0, "missing `T=<int>` header"))?;
    let t_count = header_value(line, header.trim(), "T")?;
    if t_count == 0 {
        return Err(Error::parse(line, "T must be at least 1"));
    }
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut slices: Vec<Vec<Edge>> = vec![Vec::new(); t_count];
    for entry in lines {
        let (line, text) = entry?;
        let [t, u, v] = record_fields(line, &text)?;
        let t = parse_index(line, "slice", &t)?;
        if t >= t_count {
            return Err(Error::parse(line, format!("slice {t} out of range (T={t_count})")));
        }
        if u.is_empty() || v.is_empty() {
            return Err(Error::parse(line, "empty node label"));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop on node `{u}`")));
        }
        let mut id = |label: String| {
            *index.entry(label.clone()).or_insert_with(|| {
                labels.push(label);
                labels.len() - 1
            })
        };
        let (u, v) = (id(u), id(v));
        slices[t].push((u, v));
    }
    let n = labels.len();
    Ok((assemble(n, slices)?, labels))
}

pub fn write_label_table<W: Write>(labels: &[String], mut w: W) -> Result<()> {
    writeln!(w, "node\tlabel")?;
    for (i, label) in labels.iter().enumerate() {
        writeln!(w, "{i}\t{label}")?;
    }
    w.flush()?;
    Ok(())
}

/// One row per node, comma-separated per-slice degrees, no header.
pub fn write_degree_matrix_csv<W: Write>(d: &DegreeMatrix, mut w: W) -> Result<()> {
    for i in 0..d.rows() {
        let row: Vec<String> = d.row(i).iter().map(u32::to_string).collect();
        writeln!(w, "{}", row.join(","))?;
    }
    w.flush()?;
    Ok(())
}

/// Inverse of [`write_degree_matrix_csv`].
pub fn read_degree_matrix_csv<R: BufRead>(reader: R) -> Result<DegreeMatrix> {
    let mut rows = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|f| {
                f.trim()
                    .parse()
                    .map_err(|_| Error::parse(i + 1, format!("`{f}` is not a degree")))
            })
            .collect::<Result<Vec<u32>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::parse(0, "empty degree matrix"));
    }
    Ok(DegreeMatrix::from_rows(&rows)?)
}

pub fn write_grouping_csv<W: Write>(grouping: &AnonymityGrouping, mut w: W) -> Result<()> {
    writeln!(w, "node,group")?;
    for (i, g) in grouping.assignment().iter().enumerate() {
        writeln!(w, "{i},{g}")?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_utility_csv<W: Write>(rows: &[SliceUtility], mut w: W) -> Result<()> {
    writeln!(w, "slice,active_edges,pr_cosine,edge_edits,l1_degree_dist")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{}",
            r.slice, r.active_edges, r.pr_cosine, r.edge_edits, r.l1_degree_dist
        )?;
    }
    w.flush()?;
    Ok(())
}

/// Writes a CSV table with a header row; cells are written verbatim.
pub fn write_table<W: Write>(header: &[&str], rows: &[Vec<String>], mut w: W) -> Result<()> {
    writeln!(w, "{}", header.join(","))?;
    for row in rows {
        writeln!(w, "{}", row.join(","))?;
    }
    w.flush()?;
    Ok(())
}

pub fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::io(path, e))
}

pub fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::io(path, e))
}

/// Loads an edge list, optionally merging every `bucket` consecutive slices
/// into one (edge union).
pub fn load_edgelist(path: &Path, bucket: Option<usize>) -> Result<TemporalGraph> {
    let g = read_edgelist(open(path)?)?;
    match bucket {
        None | Some(1) => Ok(g),
        Some(width) => Ok(g.rebucket(width)?),
    }
}

pub fn save_edgelist(g: &TemporalGraph, path: &Path) -> Result<()> {
    write_edgelist(g, create(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<TemporalGraph> {
        read_edgelist(text.as_bytes())
    }

    #[test]
    fn parses_records() {
        let g = parse("n=3 T=2\n0\t0\t1\n0\t1\t2\n1\t0\t2\n").unwrap();
        assert_eq!(g.slice(0), &[(0, 1), (1, 2)]);
        assert_eq!(g.slice(1), &[(0, 2)]);
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse("# comment\nn=2 T=1\n0\t0\t1\n0\t0\t1\n0\t1\t0\n").unwrap();
        assert_eq!(g.slice(0), &[(0, 1)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = |s: &str| match parse(s) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(err("n=3 T=1\n0\t1\t1\n"), 2);
        assert_eq!(err("n=3 T=1\n# c\n0\t0\t3\n"), 3);
        assert_eq!(err("n=3 T=1\n1\t0\t1\n"), 2);
        assert_eq!(err("n=3 T=1\n0\t0\n"), 2);
        assert_eq!(err("n=3 T=1\n0\tx\t1\n"), 2);
        assert_eq!(err("T=1 n=3\n"), 1);
        assert_eq!(err(""), 0);
    }

    #[test]
    fn round_trip() {
        let g = TemporalGraph::new(5, vec![vec![(3, 1), (0, 4)], vec![], vec![(1, 2)]]).unwrap();
        let mut buf = Vec::new();
        write_edgelist(&g, &mut buf).unwrap();
        assert_eq!(parse(std::str::from_utf8(&buf).unwrap()).unwrap(), g);
    }

    #[test]
    fn labeled_input() {
        let (g, labels) =
            read_labeled_edgelist("T=2\n0\talice\tbob\n1\tbob\tcarol\n1\tcarol\tbob\n".as_bytes())
                .unwrap();
        assert_eq!(labels, ["alice", "bob", "carol"]);
        assert_eq!(g.slice(0), &[(0, 1)]);
        assert_eq!(g.slice(1), &[(1, 2)]);
        let mut buf = Vec::new();
        write_label_table(&labels, &mut buf).unwrap();
        assert_eq!(buf, b"node\tlabel\n0\talice\n1\tbob\n2\tcarol\n");
        assert!(read_labeled_edgelist("T=1\n0\ta\ta\n".as_bytes()).is_err());
    }

    #[test]
    fn degree_csv_round_trip() {
        let d = DegreeMatrix::from_rows(&[vec![2, 2], vec![2, 1], vec![1, 2], vec![1, 1]]).unwrap();
        let mut buf = Vec::new();
        write_degree_matrix_csv(&d, &mut buf).unwrap();
        assert_eq!(buf, b"2,2\n2,1\n1,2\n1,1\n");
        assert_eq!(read_degree_matrix_csv(buf.as_slice()).unwrap(), d);
    }
}
