use std::fmt::Write;

use crate::element::{ElementLabel, GroundSet};
use crate::functors::contract;
use crate::matroid::Matroid;

use super::te::{te_check, Limits, TeClass, TeVerdict};

/// A pair of sequences, each a list of bases given by their labels.
pub type LabeledWitness = (Vec<Vec<ElementLabel>>, Vec<Vec<ElementLabel>>);

/// Outcome of one `(class, length)` check in a [`WhiteReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub class: TeClass,
    pub length: usize,
    /// One of `holds_at_m`, `fails_at_m`, `budget_exceeded`.
    pub verdict: String,
    pub witness: Option<LabeledWitness>,
    pub explored: u64,
}

impl ReportEntry {
    pub fn holds(&self) -> bool {
        self.verdict == "holds_at_m"
    }
}

/// Bounded exchange checks run on the contraction of a matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteReport {
    pub original_elements: usize,
    pub original_bases: usize,
    pub contracted_ground: Vec<ElementLabel>,
    pub contracted_bases: usize,
    pub entries: Vec<ReportEntry>,
    pub explored: u64,
    pub nontrivial_classes: u64,
}

/// Contracts `m`, then checks classes 1, 2, 3 at every length `2..=max_len`
/// on the contraction.
pub fn white_report(m: &Matroid, max_len: usize, limits: Limits) -> WhiteReport {
    let c = contract(m.family()).expect("a matroid has at least one basis");
    let contracted = Matroid::from_family_unchecked(c.contracted);
    let mut entries = Vec::new();
    let (mut explored, mut nontrivial) = (0, 0);
    for class in TeClass::ALL {
        for length in 2..=max_len {
            let o = te_check(&contracted, class, length, limits).expect("length at least 2");
            explored += o.explored;
            nontrivial += o.nontrivial_classes;
            let witness = match &o.verdict {
                TeVerdict::FailsAtM { witness: (a, b) } => {
                    Some((labels(contracted.ground(), a), labels(contracted.ground(), b)))
                }
                _ => None,
            };
            entries.push(ReportEntry {
                class,
                length,
                verdict: o.verdict.as_str().to_string(),
                witness,
                explored: o.explored,
            });
        }
    }
    WhiteReport {
        original_elements: m.ground().len(),
        original_bases: m.bases().len(),
        contracted_ground: contracted.ground().labels().to_vec(),
        contracted_bases: contracted.bases().len(),
        entries,
        explored,
        nontrivial_classes: nontrivial,
    }
}

fn labels(ground: &GroundSet, seq: &[crate::element::ElementSet]) -> Vec<Vec<ElementLabel>> {
    seq.iter().map(|&b| ground.labels_of(b)).collect()
}

fn join_labels(ls: &[ElementLabel]) -> String {
    ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// `x1 x2,x3 x4` for a sequence of two bases.
pub(crate) fn format_sequence(seq: &[Vec<ElementLabel>]) -> String {
    seq.iter().map(|b| join_labels(b)).collect::<Vec<_>>().join(",")
}

impl WhiteReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(ReportEntry::holds)
    }

    pub fn any_fails(&self) -> bool {
        self.entries.iter().any(|e| e.verdict == "fails_at_m")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "matroid      {} elements, {} bases",
            self.original_elements, self.original_bases
        );
        let _ = writeln!(
            out,
            "contraction  {} elements, {} bases  [{}]",
            self.contracted_ground.len(),
            self.contracted_bases,
            join_labels(&self.contracted_ground)
        );
        let _ = writeln!(out, "{:<6} {:>2}  {:<16} {:>10}", "class", "m", "verdict", "explored");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "TE({})  {:>2}  {:<16} {:>10}",
                e.class.number(),
                e.length,
                e.verdict,
                e.explored
            );
            if let Some((a, b)) = &e.witness {
                let _ = writeln!(out, "    ({}) vs ({})", format_sequence(a), format_sequence(b));
            }
        }
        let _ = writeln!(
            out,
            "total explored {} in {} nontrivial classes",
            self.explored, self.nontrivial_classes
        );
        out
    }

    /// `key=value` lines, one fact per line.
    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "original_elements={}", self.original_elements);
        let _ = writeln!(out, "original_bases={}", self.original_bases);
        let _ = writeln!(out, "contracted_ground={}", join_labels(&self.contracted_ground));
        let _ = writeln!(out, "contracted_elements={}", self.contracted_ground.len());
        let _ = writeln!(out, "contracted_bases={}", self.contracted_bases);
        for e in &self.entries {
            let key = format!("te{}.m{}", e.class.number(), e.length);
            let _ = writeln!(out, "{key}={}", e.verdict);
            let _ = writeln!(out, "{key}.explored={}", e.explored);
            if let Some((a, b)) = &e.witness {
                let _ = writeln!(out, "{key}.witness={};{}", format_sequence(a), format_sequence(b));
            }
        }
        let _ = writeln!(out, "explored={}", self.explored);
        let _ = writeln!(out, "nontrivial_classes={}", self.nontrivial_classes);
        out
    }
}
