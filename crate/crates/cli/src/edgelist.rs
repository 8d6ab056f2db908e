//! Signed edge-list files: a `n m` header, then `m` lines `u v s` with the
//! sign written `+` or `-` (numeric `+1`/`-1`/`1` accepted on read); `#`
//! starts a comment. Writing then reading gives back the normalized graph.

use sgraph::{Error, Result, SignedGraph};

pub fn parse(text: &str) -> Result<SignedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match header {
            None => {
                if toks.len() != 2 {
                    return Err(parse_err(format!("expected header 'n m', got '{line}'")));
                }
                let n = toks[0]
                    .parse()
                    .map_err(|_| parse_err(format!("bad vertex count '{}'", toks[0])))?;
                let m = toks[1]
                    .parse()
                    .map_err(|_| parse_err(format!("bad edge count '{}'", toks[1])))?;
                header = Some((n, m));
            }
            Some(_) => {
                if toks.len() != 3 {
                    return Err(parse_err(format!("expected 'u v s', got '{line}'")));
                }
                let u = toks[0]
                    .parse()
                    .map_err(|_| parse_err(format!("bad vertex id '{}'", toks[0])))?;
                let v = toks[1]
                    .parse()
                    .map_err(|_| parse_err(format!("bad vertex id '{}'", toks[1])))?;
                let s = match toks[2] {
                    "+" | "+1" | "1" => 1,
                    "-" | "-1" => -1,
                    other => return Err(parse_err(format!("bad sign '{other}'"))),
                };
                edges.push((u, v, s));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse {
            line: 0,
            message: "empty edge-list file".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header declares {m} edges, file has {}", edges.len()),
        });
    }
    SignedGraph::build(n, &edges)
}

pub fn read(path: &std::path::Path) -> Result<SignedGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse(&text)
}

pub fn format(g: &SignedGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.sign));
    }
    out
}

pub fn write(path: &std::path::Path, g: &SignedGraph) -> Result<()> {
    std::fs::write(path, format(g)).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot write {}: {e}", path.display()),
    })
}
