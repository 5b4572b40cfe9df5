//! Subcommand bodies. Each writes to the given sinks and returns an [`Exit`]
//! code, so they can be driven from tests without spawning a process.

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use ucfam_core::{
    canonical_form, enumerate_pure, enumerate_union_closed, export_dot, extract_hyperisomorphism,
    find_isomorphisms, frankl_abundance, is_pure, purify, redundant_elements, to_lattice, Error,
    MemberSet, Method, RemovalOrder, SetFamily,
};

use crate::format::{parse_family, write_family};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    /// The question was answered in the negative.
    Negative = 1,
    /// Unreadable or malformed input.
    InputError = 2,
    /// Input parsed but violates a command precondition.
    Precondition = 3,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

fn load(path: &Path, io: &mut Io) -> io::Result<Result<SetFamily, Exit>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            writeln!(io.err, "error: {}: {e}", path.display())?;
            return Ok(Err(Exit::InputError));
        }
    };
    match parse_family(&text) {
        Ok(f) => Ok(Ok(f)),
        Err(e) => {
            writeln!(io.err, "error: {}: {e}", path.display())?;
            Ok(Err(Exit::InputError))
        }
    }
}

macro_rules! load_or_exit {
    ($path:expr, $io:expr) => {
        match load($path, $io)? {
            Ok(f) => f,
            Err(code) => return Ok(code),
        }
    };
}

fn members_json(members: &[MemberSet]) -> Vec<Vec<u32>> {
    members.iter().map(|m| m.to_vec()).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub ground_size: u32,
    pub members: usize,
    pub union: Vec<u32>,
    pub union_size: usize,
    pub union_closed: bool,
    pub pure: bool,
    pub minimal_members: Vec<Vec<u32>>,
    pub redundant_elements: Vec<u32>,
}

impl CheckReport {
    pub fn new(f: &SetFamily) -> Self {
        CheckReport {
            ground_size: f.ground_size(),
            members: f.len(),
            union: f.union().to_vec(),
            union_size: f.union().len(),
            union_closed: f.is_union_closed(),
            pure: is_pure(f),
            minimal_members: members_json(&f.minimal_members()),
            redundant_elements: redundant_elements(f).iter().map(|e| e.get()).collect(),
        }
    }
}

pub fn check(path: &Path, json: bool, io: &mut Io) -> io::Result<Exit> {
    let f = load_or_exit!(path, io);
    let r = CheckReport::new(&f);
    if json {
        serde_json::to_writer(&mut *io.out, &r)?;
        writeln!(io.out)?;
    } else {
        let minimal: Vec<String> = f.minimal_members().iter().map(|m| m.to_string()).collect();
        let redundant: Vec<String> = r.redundant_elements.iter().map(|e| e.to_string()).collect();
        writeln!(io.out, "union-closed: {}", yes_no(r.union_closed))?;
        writeln!(io.out, "pure: {}", yes_no(r.pure))?;
        writeln!(io.out, "members: {}", r.members)?;
        writeln!(io.out, "union size: {}", r.union_size)?;
        writeln!(io.out, "union: {}", f.union())?;
        writeln!(io.out, "minimal members: {}", minimal.join(" "))?;
        writeln!(io.out, "redundant elements: {}", redundant.join(" "))?;
    }
    Ok(if r.union_closed {
        Exit::Success
    } else {
        Exit::Negative
    })
}

#[derive(Debug, Serialize)]
struct PurifyReport {
    ground_size: u32,
    family: Vec<Vec<u32>>,
    removed: Vec<u32>,
}

pub fn purify_cmd(path: &Path, order: RemovalOrder, json: bool, io: &mut Io) -> io::Result<Exit> {
    let f = load_or_exit!(path, io);
    let (pure, trace) = purify(&f, order);
    for step in &trace.steps {
        writeln!(
            io.err,
            "remove {}: {} -> {}",
            step.removed, step.before, step.after
        )?;
    }
    if json {
        let r = PurifyReport {
            ground_size: pure.ground_size(),
            family: members_json(pure.members()),
            removed: trace.removed().iter().map(|e| e.get()).collect(),
        };
        serde_json::to_writer(&mut *io.out, &r)?;
        writeln!(io.out)?;
    } else {
        io.out.write_all(write_family(&pure).as_bytes())?;
    }
    Ok(Exit::Success)
}

#[derive(Debug, Serialize)]
struct LiftReport {
    map: Vec<(u32, u32)>,
    isomorphism: Vec<(Vec<u32>, Vec<u32>)>,
}

pub fn lift(first: &Path, second: &Path, json: bool, io: &mut Io) -> io::Result<Exit> {
    let f1 = load_or_exit!(first, io);
    let f2 = load_or_exit!(second, io);
    for (name, f) in [("first", &f1), ("second", &f2)] {
        if !f.is_union_closed() {
            writeln!(io.err, "error: {name} family is not union-closed")?;
            return Ok(Exit::Precondition);
        }
        if !is_pure(f) {
            writeln!(io.err, "error: {name} family is not pure")?;
            return Ok(Exit::Precondition);
        }
    }
    let Some(h) = find_isomorphisms(&f1, &f2, Some(1)).into_iter().next() else {
        writeln!(io.err, "no isomorphism")?;
        return Ok(Exit::Negative);
    };
    // Extraction re-checks that the ground map induces `h` exactly.
    let ground = extract_hyperisomorphism(&h)
        .unwrap_or_else(|e| panic!("hyperisomorphism extraction failed: {e}"));
    if json {
        let r = LiftReport {
            map: ground.pairs().to_vec(),
            isomorphism: h.pairs().map(|(a, b)| (a.to_vec(), b.to_vec())).collect(),
        };
        serde_json::to_writer(&mut *io.out, &r)?;
        writeln!(io.out)?;
    } else {
        write!(io.out, "{ground}")?;
    }
    Ok(Exit::Success)
}

#[derive(Debug, Serialize)]
struct Abundance {
    element: u32,
    count: usize,
}

#[derive(Debug, Serialize)]
struct FranklReport {
    members: usize,
    abundant: Vec<Abundance>,
}

pub fn frankl(path: &Path, json: bool, io: &mut Io) -> io::Result<Exit> {
    let f = load_or_exit!(path, io);
    let abundant = match frankl_abundance(&f) {
        Ok(a) => a,
        Err(e @ (Error::NotUnionClosed | Error::NoNonemptyMember)) => {
            writeln!(io.err, "error: {e}")?;
            return Ok(Exit::Precondition);
        }
        Err(e) => return Err(io::Error::other(e)),
    };
    if json {
        let r = FranklReport {
            members: f.len(),
            abundant: abundant
                .iter()
                .map(|&(e, count)| Abundance {
                    element: e.get(),
                    count,
                })
                .collect(),
        };
        serde_json::to_writer(&mut *io.out, &r)?;
        writeln!(io.out)?;
    } else {
        for (e, count) in &abundant {
            writeln!(io.out, "{e}: {count}/{}", f.len())?;
        }
    }
    Ok(if abundant.is_empty() {
        Exit::Negative
    } else {
        Exit::Success
    })
}

#[derive(Debug, Serialize)]
struct LatticeReport {
    nodes: Vec<Vec<u32>>,
    edges: Vec<(usize, usize)>,
    bottom: usize,
    top: usize,
}

pub fn lattice(path: &Path, dot: Option<&Path>, json: bool, io: &mut Io) -> io::Result<Exit> {
    let f = load_or_exit!(path, io);
    let l = match to_lattice(&f) {
        Ok(l) => l,
        Err(e) => {
            writeln!(io.err, "error: {e}")?;
            return Ok(Exit::Precondition);
        }
    };
    let rendered = export_dot(&l);
    match dot {
        Some(p) => fs::write(p, &rendered)?,
        None if !json => io.out.write_all(rendered.as_bytes())?,
        None => {}
    }
    if json {
        let r = LatticeReport {
            nodes: members_json(l.elements()),
            edges: l.cover_edges().to_vec(),
            bottom: l.bottom(),
            top: l.top(),
        };
        serde_json::to_writer(&mut *io.out, &r)?;
        writeln!(io.out)?;
    } else if dot.is_some() {
        writeln!(io.out, "nodes: {}", l.len())?;
        writeln!(io.out, "edges: {}", l.cover_edges().len())?;
        writeln!(io.out, "bottom: {}", l.elements()[l.bottom()])?;
        writeln!(io.out, "top: {}", l.elements()[l.top()])?;
    }
    Ok(Exit::Success)
}

pub struct EnumerateOptions {
    pub n: u32,
    pub pure: bool,
    pub require_empty: bool,
    pub canonical: bool,
    pub method: Method,
    pub json: bool,
}

#[derive(Debug, Serialize)]
struct ClassCount {
    families: usize,
    classes: usize,
}

/// Streams families as family-file blocks separated by `---` lines, or as
/// JSON lines. With `canonical`, prints only family and class counts.
pub fn enumerate(opts: &EnumerateOptions, io: &mut Io) -> io::Result<Exit> {
    let stream = if opts.pure {
        enumerate_pure(opts.n)
    } else {
        enumerate_union_closed(opts.n, opts.require_empty, opts.method)
    };
    let stream = match stream {
        Ok(s) => s,
        Err(e) => {
            writeln!(io.err, "error: {e}")?;
            return Ok(Exit::Precondition);
        }
    };
    let require_empty = opts.require_empty;
    let stream = stream.filter(move |f| !require_empty || f.contains(MemberSet::EMPTY));

    if opts.canonical {
        let mut classes = BTreeSet::new();
        let mut families = 0;
        for f in stream {
            families += 1;
            classes.insert(canonical_form(&f).map_err(io::Error::other)?);
        }
        let c = ClassCount {
            families,
            classes: classes.len(),
        };
        if opts.json {
            serde_json::to_writer(&mut *io.out, &c)?;
            writeln!(io.out)?;
        } else {
            writeln!(io.out, "families: {}", c.families)?;
            writeln!(io.out, "classes: {}", c.classes)?;
        }
        return Ok(Exit::Success);
    }

    for (k, f) in stream.enumerate() {
        if opts.json {
            serde_json::to_writer(&mut *io.out, &members_json(f.members()))?;
            writeln!(io.out)?;
        } else {
            if k > 0 {
                writeln!(io.out, "---")?;
            }
            io.out.write_all(write_family(&f).as_bytes())?;
        }
    }
    Ok(Exit::Success)
}
