use curvelab::arith::PrimeField;
use curvelab::groebner::Ideal;
use curvelab::ring::{parse_polynomial, Ring};
use curvelab::{Error, Result};

/// Parses an ideal file: a header `char p vars n` followed by one polynomial
/// per line in the variables `x0..x{n-1}`. Blank lines and lines starting
/// with `#` are skipped.
pub fn parse_ideal_file(text: &str) -> Result<Ideal> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header `char p vars n`".into(),
    })?;
    let bad_header = || Error::Parse {
        line: hl,
        msg: format!("expected header `char p vars n`, got {header:?}"),
    };
    let words: Vec<&str> = header.split_whitespace().collect();
    let (p, n) = match words.as_slice() {
        ["char", p, "vars", n] => (
            p.parse::<u32>().map_err(|_| bad_header())?,
            n.parse::<usize>().map_err(|_| bad_header())?,
        ),
        _ => return Err(bad_header()),
    };
    let field = PrimeField::new(p).map_err(|e| Error::Parse {
        line: hl,
        msg: e.to_string(),
    })?;
    let ring = Ring::new(field, n).map_err(|e| Error::Parse {
        line: hl,
        msg: e.to_string(),
    })?;
    let mut gens = Vec::new();
    for (ln, line) in lines {
        let f = parse_polynomial(&ring, line).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line: ln, msg },
            other => Error::Parse {
                line: ln,
                msg: other.to_string(),
            },
        })?;
        if !f.is_homogeneous() {
            return Err(Error::Parse {
                line: ln,
                msg: "polynomial is not homogeneous".into(),
            });
        }
        gens.push(f);
    }
    if gens.is_empty() {
        return Err(Error::Parse {
            line: hl,
            msg: "no generators after the header".into(),
        });
    }
    Ideal::new(&ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_header_and_generators() {
        let i = parse_ideal_file("# twisted cubic\nchar 101 vars 4\n\nx0*x2-x1^2\nx0*x3-x1*x2\nx1*x3-x2^2\n").unwrap();
        assert_eq!(i.gens().len(), 3);
        assert_eq!(i.ring().nvars(), 4);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_ideal_file("char 101 vars 3\nx0+x1\nx0*+x2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_ideal_file("char 100 vars 3\nx0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e}");
        let e = parse_ideal_file("\nchars 7\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_ideal_file("char 7 vars 2\nx0^2+x1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
    }
}
