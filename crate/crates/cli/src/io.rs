//! CSV ingestion and the JSON front-set dump.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use ndlu_core::{FrontSet, Solution};
use serde::{Deserialize, Serialize};

/// Reads `id,obj_1,...,obj_M` rows (header required). Objectives listed in
/// `negate` (1-based) are multiplied by -1 so that they can be maximized.
pub fn read_csv(reader: impl Read, negate: &[usize]) -> Result<Vec<Solution>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let m = rdr
        .headers()
        .context("reading CSV header")?
        .len()
        .saturating_sub(1);
    if m < 2 {
        bail!("CSV header must name an id column and at least two objectives");
    }
    if let Some(&bad) = negate.iter().find(|&&c| c == 0 || c > m) {
        bail!("--negate column {bad} is outside 1..={m}");
    }
    let mut out = Vec::new();
    for (row, record) in rdr.records().enumerate() {
        let line = row + 2;
        let record = record.with_context(|| format!("CSV line {line}"))?;
        if record.len() != m + 1 {
            bail!(
                "CSV line {line}: expected {} fields, found {}",
                m + 1,
                record.len()
            );
        }
        let mut obj = Vec::with_capacity(m);
        for (j, field) in record.iter().skip(1).enumerate() {
            let v: f64 = field.parse().with_context(|| {
                format!(
                    "CSV line {line}: objective {} is not a number: `{field}`",
                    j + 1
                )
            })?;
            obj.push(if negate.contains(&(j + 1)) { -v } else { v });
        }
        out.push(Solution::new(&record[0], obj).with_context(|| format!("CSV line {line}"))?);
    }
    Ok(out)
}

pub fn read_csv_file(path: &Path, negate: &[usize]) -> Result<Vec<Solution>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    read_csv(BufReader::new(file), negate).with_context(|| format!("reading {}", path.display()))
}

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    id: String,
    obj: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Dump {
    m: usize,
    fronts: Vec<Vec<Entry>>,
}

pub fn dump_to_string(fs: &FrontSet) -> String {
    let dump = Dump {
        m: fs.m().unwrap_or(0),
        fronts: fs
            .fronts()
            .iter()
            .map(|f| {
                f.iter()
                    .map(|s| Entry {
                        id: s.id().to_string(),
                        obj: s.objectives().to_vec(),
                    })
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string(&dump).expect("dump serializes")
}

/// Parses a dump. Structure (dimensions, ids) is checked; level invariants
/// are not, so that `verify` can report them.
pub fn dump_from_str(text: &str) -> Result<FrontSet> {
    let dump: Dump = serde_json::from_str(text).context("parsing front-set dump")?;
    let mut fronts = Vec::with_capacity(dump.fronts.len());
    for front in dump.fronts {
        let mut f = Vec::with_capacity(front.len());
        for e in front {
            if e.obj.len() != dump.m {
                bail!(
                    "solution `{}` has {} objectives, dump declares {}",
                    e.id,
                    e.obj.len(),
                    dump.m
                );
            }
            f.push(Solution::new(e.id, e.obj)?);
        }
        fronts.push(f);
    }
    if fronts.is_empty() && dump.m != 0 {
        return Ok(FrontSet::with_objectives(dump.m)?);
    }
    Ok(FrontSet::from_fronts(fronts)?)
}

pub fn read_dump(path: &Path) -> Result<FrontSet> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    dump_from_str(&text).with_context(|| format!("loading {}", path.display()))
}

pub fn write_dump(path: &Path, fs: &FrontSet) -> Result<()> {
    let mut w =
        BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
    w.write_all(dump_to_string(fs).as_bytes())?;
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(())
}

/// Parses `--negate 2,3`.
pub fn parse_columns(list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .with_context(|| format!("bad column `{s}`"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndlu_core::full_sort;

    #[test]
    fn csv_with_negation() {
        let text = "id,f1,f2\na, 1.5, 2\nb,3,-4\n";
        let sols = read_csv(text.as_bytes(), &[2]).unwrap();
        assert_eq!(sols[0].objectives(), &[1.5, -2.0]);
        assert_eq!(sols[1].objectives(), &[3.0, 4.0]);
        assert!(read_csv(text.as_bytes(), &[3]).is_err());
        assert!(read_csv("id,f1\na,1\n".as_bytes(), &[]).is_err());
        assert!(read_csv("id,f1,f2\na,1,x\n".as_bytes(), &[]).is_err());
        assert!(read_csv("id,f1,f2\na,1,nan\n".as_bytes(), &[]).is_err());
    }

    #[test]
    fn dump_round_trips_bit_exact() {
        let sols = vec![
            Solution::new("a", vec![0.1 + 0.2, 1e-300]).unwrap(),
            Solution::new("b", vec![std::f64::consts::PI, -2.5e17]).unwrap(),
        ];
        let fs = full_sort(&sols).unwrap();
        let back = dump_from_str(&dump_to_string(&fs)).unwrap();
        assert_eq!(back, fs);
        let empty = dump_from_str(r#"{"m":3,"fronts":[]}"#).unwrap();
        assert_eq!(empty.m(), Some(3));
        assert!(dump_from_str(r#"{"m":3,"fronts":[[{"id":"a","obj":[1,2]}]]}"#).is_err());
    }

    #[test]
    fn column_lists() {
        assert_eq!(parse_columns("1, 3").unwrap(), vec![1, 3]);
        assert!(parse_columns("x").is_err());
    }
}
