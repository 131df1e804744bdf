//! Ground-truth permutation input: one line of comma-separated ranks indexed
//! by rule id, so `2,0,1` gives rule 0 rank 2. Given either inline or as the
//! path of a file holding that line.

use std::path::Path;

use rule_order::order::check_permutation;

/// Reads `source` as a file if one exists at that path, otherwise parses it
/// as an inline list. Errors name the offending line.
pub fn load(source: &str, n: usize) -> Result<Vec<usize>, String> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read permutation file {source}: {e}"))?;
        parse(&text, n).map_err(|e| format!("{source}: {e}"))
    } else {
        parse(source, n)
    }
}

pub fn parse(text: &str, n: usize) -> Result<Vec<usize>, String> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let (lineno, line) = match lines.as_slice() {
        [] => return Err("line 1: no ranks given".into()),
        [only] => *only,
        [_, (extra, _), ..] => {
            return Err(format!(
                "line {extra}: expected a single line of comma-separated ranks"
            ))
        }
    };
    let ranks = line
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| format!("line {lineno}: `{tok}` is not a non-negative integer rank"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if ranks.len() != n {
        return Err(format!(
            "line {lineno}: expected {n} ranks for --n {n}, found {}",
            ranks.len()
        ));
    }
    check_permutation(&ranks).map_err(|e| format!("line {lineno}: {e}"))?;
    Ok(ranks)
}
