//! Burmeister context files:
//!
//! ```text
//! B
//!
//! |G|
//! |M|
//!
//! object names, one per line
//! attribute names, one per line
//! one row of '.' and 'X' per object
//! ```

use crate::error::{Error, Result};
use crate::fca::FormalContext;
use crate::order::Subset;

pub fn write_cxt(ctx: &FormalContext) -> String {
    let (g, m) = (ctx.objects().len(), ctx.attributes().len());
    let mut out = format!("B\n\n{g}\n{m}\n\n");
    for name in ctx.objects().iter().chain(ctx.attributes()) {
        out.push_str(name);
        out.push('\n');
    }
    for i in 0..g {
        out.extend((0..m).map(|a| if ctx.incident(i, a) { 'X' } else { '.' }));
        out.push('\n');
    }
    out
}

pub fn read_cxt(text: &str) -> Result<FormalContext> {
    let mut lines = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l)).enumerate();
    let mut next = |what: &str| {
        lines.next().ok_or_else(|| Error::Parse(format!("unexpected end of file, expected {what}")))
    };
    let err = |line: usize, msg: String| Error::Parse(format!("line {}: {msg}", line + 1));

    let (i, header) = next("header \"B\"")?;
    if header.trim() != "B" {
        return Err(err(i, format!("expected \"B\", found {header:?}")));
    }
    next("blank line")?;
    let mut count = |what: &str| -> Result<usize> {
        let (i, l) = next(what)?;
        l.trim().parse().map_err(|_| err(i, format!("expected {what}, found {l:?}")))
    };
    let g = count("object count")?;
    let m = count("attribute count")?;
    let (i, blank) = next("blank line")?;
    if !blank.trim().is_empty() {
        return Err(err(i, format!("expected blank line, found {blank:?}")));
    }
    let objects = (0..g).map(|_| next("object name").map(|(_, l)| l.to_string())).collect::<Result<Vec<_>>>()?;
    let attributes =
        (0..m).map(|_| next("attribute name").map(|(_, l)| l.to_string())).collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(g);
    for _ in 0..g {
        let (i, l) = next("incidence row")?;
        let l = l.trim_end();
        if l.chars().count() != m {
            return Err(err(i, format!("row has {} cells, expected {m}", l.chars().count())));
        }
        let mut row = Subset::with_capacity(m);
        for (a, c) in l.chars().enumerate() {
            match c {
                'X' | 'x' => row.insert(a),
                '.' => {}
                other => return Err(err(i, format!("unexpected cell {other:?}"))),
            }
        }
        rows.push(row);
    }
    if let Some((i, l)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(err(i, format!("trailing content {l:?}")));
    }
    FormalContext::new(objects, attributes, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::relation::Relation;

    #[test]
    fn writes_exact_layout() {
        let c3 = named::chain(3);
        let ctx = FormalContext::from_relation(&c3, &Relation::order(&c3)).unwrap();
        assert_eq!(write_cxt(&ctx), "B\n\n3\n3\n\n0\nm\n1\n0\nm\n1\nXXX\n.XX\n..X\n");
        assert_eq!(read_cxt(&write_cxt(&ctx)).unwrap(), ctx);
    }

    #[test]
    fn rejects_malformed() {
        assert!(read_cxt("").is_err());
        assert!(read_cxt("A\n\n1\n1\n\ng\nm\nX\n").is_err());
        assert!(read_cxt("B\n\n1\n1\n\ng\nm\nXX\n").is_err());
        assert!(read_cxt("B\n\n1\n1\n\ng\nm\n?\n").is_err());
        assert!(read_cxt("B\n\n2\n1\n\ng\nh\nm\nX\n").is_err());
        assert!(read_cxt("B\n\n1\n1\n\ng\nm\nX\nextra\n").is_err());
        let ok = read_cxt("B\r\n\r\n1\r\n1\r\n\r\ng\r\nm\r\nX\r\n").unwrap();
        assert!(ok.incident(0, 0));
    }
}
