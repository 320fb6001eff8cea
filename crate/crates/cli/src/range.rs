//! `--n` / `--N` values: inclusive ranges `a..b` or comma lists.

/// A non-empty list of point counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counts(pub Vec<usize>);

pub fn parse_counts(s: &str) -> Result<Counts, String> {
    parse_range(s).map(Counts)
}

/// Parses `a..b` (inclusive) or `a,b,c`; the result is never empty.
pub fn parse_range(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("'{}' is not a non-negative integer", t.trim()))
    };
    let values = if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (parse(a)?, parse(b)?);
        (a..=b).collect()
    } else {
        s.split(',').map(parse).collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err(format!("range '{s}' is empty"));
    }
    Ok(values)
}
