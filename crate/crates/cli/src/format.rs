//! The plain-text family format.
//!
//! ```text
//! # comment
//! ground: 3
//! {}
//! 1
//! 1 2
//! ```
//!
//! An optional `ground: <n>` header comes first; without it the ground size is
//! the largest element mentioned. Each further nonblank line is one member as
//! space-separated positive integers, `{}` for the empty set. `#` starts a
//! comment. The writer always emits the header, members in canonical order,
//! elements ascending, and a trailing newline.

use std::fmt::Write as _;

use thiserror::Error;
use ucfam_core::{MemberSet, SetFamily, MAX_GROUND_SIZE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

pub fn parse_family(text: &str) -> Result<SetFamily, ParseError> {
    let mut ground: Option<u32> = None;
    let mut members: Vec<(usize, MemberSet)> = Vec::new();
    let mut seen_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("ground:") {
            if seen_content {
                return err(line_no, "the ground header must come before any member");
            }
            let n: u32 = match rest.trim().parse() {
                Ok(n) => n,
                Err(_) => return err(line_no, format!("invalid ground size `{}`", rest.trim())),
            };
            if n > MAX_GROUND_SIZE {
                return err(
                    line_no,
                    format!("ground size {n} exceeds the limit of {MAX_GROUND_SIZE}"),
                );
            }
            ground = Some(n);
            seen_content = true;
            continue;
        }
        seen_content = true;
        members.push((line_no, parse_member(line_no, line)?));
    }

    let ground_size = match ground {
        Some(n) => {
            if let Some((line, m)) = members.iter().find(|(_, m)| m.max_element() > n) {
                return err(
                    *line,
                    format!("element {} exceeds ground size {n}", m.max_element()),
                );
            }
            n
        }
        None => members
            .iter()
            .map(|(_, m)| m.max_element())
            .max()
            .unwrap_or(0),
    };

    let mut sorted: Vec<&(usize, MemberSet)> = members.iter().collect();
    sorted.sort_by_key(|(line, m)| (*m, *line));
    if let Some(w) = sorted.windows(2).find(|w| w[0].1 == w[1].1) {
        return err(
            w[1].0,
            format!("duplicate member {} (first on line {})", w[1].1, w[0].0),
        );
    }
    Ok(
        SetFamily::new(ground_size, members.into_iter().map(|(_, m)| m))
            .expect("members validated above"),
    )
}

fn parse_member(line_no: usize, line: &str) -> Result<MemberSet, ParseError> {
    if line == "{}" {
        return Ok(MemberSet::EMPTY);
    }
    let mut set = MemberSet::EMPTY;
    for token in line.split_whitespace() {
        if token == "{}" {
            return err(line_no, "`{}` must stand alone on its line");
        }
        let e: u32 = match token.parse() {
            Ok(e) if e >= 1 => e,
            _ => return err(line_no, format!("invalid element `{token}`")),
        };
        if e > MAX_GROUND_SIZE {
            return err(
                line_no,
                format!("element {e} exceeds the limit of {MAX_GROUND_SIZE}"),
            );
        }
        if set.contains(e) {
            return err(line_no, format!("element {e} repeated"));
        }
        set = set.with(e);
    }
    Ok(set)
}

/// One member as it appears in a file: `{}` or ascending elements.
pub fn format_member(m: MemberSet) -> String {
    if m.is_empty() {
        return "{}".to_string();
    }
    let parts: Vec<String> = m.iter().map(|e| e.to_string()).collect();
    parts.join(" ")
}

pub fn write_family(family: &SetFamily) -> String {
    let mut out = String::new();
    writeln!(out, "ground: {}", family.ground_size()).unwrap();
    for &m in family.members() {
        out.push_str(&format_member(m));
        out.push('\n');
    }
    out
}
