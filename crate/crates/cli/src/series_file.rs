//! Parser for the custom coefficient-file format.
//!
//! The file is plain text and diff-friendly: `#` starts a comment, the
//! first data line is a header `<indeterminate> <order>` and the remaining
//! whitespace-separated tokens are the order+1 coefficients `c0 c1 c2 ...`
//! in the `num/den` format.

use berger_eta::error::Error;
use berger_eta::rational::{rat_from_str, Rat};
use berger_eta::series::PowerSeries;

pub fn parse(text: &str) -> Result<PowerSeries<Rat>, Error> {
    let mut tokens = Vec::new();
    let mut header: Option<(String, usize)> = None;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if header.is_none() {
            let mut parts = line.split_whitespace();
            let var = parts
                .next()
                .ok_or_else(|| Error::Parse("missing indeterminate in header".to_string()))?;
            let order: usize = parts
                .next()
                .ok_or_else(|| Error::Parse("missing order in header".to_string()))?
                .parse()
                .map_err(|_| Error::Parse("order must be a non-negative integer".to_string()))?;
            if parts.next().is_some() {
                return Err(Error::Parse("header must be `<indeterminate> <order>`".to_string()));
            }
            header = Some((var.to_string(), order));
        } else {
            tokens.extend(line.split_whitespace().map(str::to_string));
        }
    }
    let (var, order) = header.ok_or_else(|| Error::Parse("empty series file".to_string()))?;
    if tokens.len() != order + 1 {
        return Err(Error::Parse(format!(
            "expected {} coefficients for order {order}, found {}",
            order + 1,
            tokens.len()
        )));
    }
    let coeffs = tokens
        .iter()
        .map(|t| rat_from_str(t))
        .collect::<Result<Vec<Rat>, Error>>()?;
    Ok(PowerSeries::from_coeffs(&var, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use berger_eta::rational::rat;

    #[test]
    fn parse_with_comments() {
        let text = "# the L-genus to order 4\nz 4\n1 0 1/3\n0 -1/45\n";
        let s = parse(text).unwrap();
        assert_eq!(s.var(), "z");
        assert_eq!(s.truncation_order(), 4);
        assert_eq!(s.coeff(2), rat(1, 3));
        assert_eq!(s.coeff(4), rat(-1, 45));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse("").is_err());
        assert!(parse("z\n1").is_err());
        assert!(parse("z 2\n1 0").is_err());
        assert!(parse("z 1\n1 x").is_err());
    }
}
