//! Plain-text matrices: a header line `rows cols`, then one line per row of
//! space-separated entries. Rationals are written `p/q`.

use std::io::{BufRead, Write};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::matrix::{IntMatrix, Matrix, RatMatrix};
use crate::error::{Error, Result};

pub fn write_matrix<T: std::fmt::Display, W: Write>(m: &Matrix<T>, mut out: W) -> Result<()> {
    writeln!(out, "{} {}", m.rows(), m.cols())?;
    for row in m.row_iter() {
        let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

fn read_generic<T, R: BufRead>(input: R, parse: impl Fn(&str) -> Option<T>) -> Result<Matrix<T>> {
    let mut lines = input
        .lines()
        .enumerate()
        .filter(|(_, l)| l.as_ref().map_or(true, |s| !s.trim().is_empty()));
    let (ln, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let header = header?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(usize::from_str)
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse {
            line: ln + 1,
            msg: e.to_string(),
        })?;
    let [rows, cols] = dims[..] else {
        return Err(Error::Parse {
            line: ln + 1,
            msg: "header must be `rows cols`".into(),
        });
    };
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (ln, line) = lines.next().ok_or(Error::Parse {
            line: ln + 1,
            msg: format!("expected {rows} rows"),
        })?;
        let line = line?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != cols {
            return Err(Error::Parse {
                line: ln + 1,
                msg: format!("expected {cols} entries, found {}", entries.len()),
            });
        }
        for e in entries {
            data.push(parse(e).ok_or_else(|| Error::Parse {
                line: ln + 1,
                msg: format!("bad entry {e:?}"),
            })?);
        }
    }
    Ok(Matrix::new(rows, cols, data))
}

pub fn read_int_matrix<R: BufRead>(input: R) -> Result<IntMatrix> {
    read_generic(input, |s| BigInt::from_str(s).ok())
}

pub fn read_rat_matrix<R: BufRead>(input: R) -> Result<RatMatrix> {
    read_generic(input, |s| match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p).ok()?;
            let q = BigInt::from_str(q).ok()?;
            (q != BigInt::from(0)).then(|| BigRational::new(p, q))
        }
        None => BigInt::from_str(s).ok().map(BigRational::from_integer),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::matrix::rat;

    #[test]
    fn rational_text_format() {
        let m = RatMatrix::new(2, 2, vec![rat(1, 2), rat(-3, 1), rat(0, 1), rat(5, 8)]);
        let mut buf = Vec::new();
        write_matrix(&m, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "2 2\n1/2 -3\n0 5/8\n");
        assert_eq!(read_rat_matrix(&buf[..]).unwrap(), m);
    }

    #[test]
    fn malformed_input() {
        assert!(read_int_matrix(&b"2 2\n1 2\n3\n"[..]).is_err());
        assert!(read_int_matrix(&b"1 1\nx\n"[..]).is_err());
        assert!(read_rat_matrix(&b"1 1\n1/0\n"[..]).is_err());
        assert!(read_int_matrix(&b""[..]).is_err());
    }
}
