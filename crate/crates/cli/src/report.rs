//! Verification reports: per-degree (and per-homological-index) rows with
//! verdicts, instance-level flags, deterministic TSV and text rendering,
//! and the exit-code policy.
//!
//! Verdict soundness gate: "violation" is only ever emitted for a stable
//! comparison with every applicable hypothesis met; unstable rows are
//! "inconclusive", and stable failures that the theory predicts (char p,
//! hypothesis not met) are "expected-fail".

use std::fmt;
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violation,
    Inconclusive,
    ExpectedFail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::Violation => "violation",
            Verdict::Inconclusive => "inconclusive",
            Verdict::ExpectedFail => "expected-fail",
        };
        write!(f, "{}", s)
    }
}

/// Classify one comparison. `expected_fail` marks contexts where the
/// inequality is allowed to fail (char p, hypothesis not met).
pub fn classify(holds: bool, stable: bool, expected_fail: bool) -> Verdict {
    if holds {
        Verdict::Holds
    } else if !stable {
        Verdict::Inconclusive
    } else if expected_fail {
        Verdict::ExpectedFail
    } else {
        Verdict::Violation
    }
}

#[derive(Debug, Clone)]
pub struct ReportRow {
    pub i: usize,
    pub d: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub verdict: Verdict,
    pub stable: bool,
}

#[derive(Debug, Clone)]
pub struct InstanceReport {
    pub instance: String,
    pub suite: String,
    pub rows: Vec<ReportRow>,
    /// None: hypothesis could not be decided (unstable gin).
    pub hypothesis_met: Option<bool>,
    pub charp: bool,
    /// Set when the whole instance could not be judged (e.g. unstable gin
    /// prevented computing a bound).
    pub inconclusive: bool,
    pub notes: Vec<String>,
}

impl InstanceReport {
    pub fn new(instance: impl Into<String>, suite: impl Into<String>) -> Self {
        InstanceReport {
            instance: instance.into(),
            suite: suite.into(),
            rows: Vec::new(),
            hypothesis_met: None,
            charp: false,
            inconclusive: false,
            notes: Vec::new(),
        }
    }

    pub fn has_violation(&self) -> bool {
        self.rows.iter().any(|r| r.verdict == Verdict::Violation)
    }

    pub fn has_inconclusive(&self) -> bool {
        self.inconclusive || self.rows.iter().any(|r| r.verdict == Verdict::Inconclusive)
    }

    pub fn has_expected_fail(&self) -> bool {
        self.rows.iter().any(|r| r.verdict == Verdict::ExpectedFail)
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub instances: Vec<InstanceReport>,
}

impl VerificationReport {
    pub fn push(&mut self, r: InstanceReport) {
        self.instances.push(r);
    }

    pub fn extend(&mut self, rs: Vec<InstanceReport>) {
        self.instances.extend(rs);
    }

    pub fn violations(&self) -> usize {
        self.instances.iter().filter(|i| i.has_violation()).count()
    }

    pub fn inconclusive(&self) -> usize {
        self.instances
            .iter()
            .filter(|i| i.has_inconclusive())
            .count()
    }

    /// 0 all pass/expected, 1 stable unexpected violation, 3 inconclusive
    /// results present (input errors exit 2 before a report exists).
    pub fn exit_code(&self) -> i32 {
        if self.violations() > 0 {
            1
        } else if self.inconclusive() > 0 {
            3
        } else {
            0
        }
    }

    /// One row per comparison:
    /// instance, suite, i, d, lhs, rhs, verdict, stable - tab-separated.
    pub fn write_tsv(&self, w: &mut impl Write) -> std::io::Result<()> {
        for inst in &self.instances {
            for r in &inst.rows {
                writeln!(
                    w,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    inst.instance, inst.suite, r.i, r.d, r.lhs, r.rhs, r.verdict, r.stable
                )?;
            }
        }
        Ok(())
    }

    pub fn write_text(&self, w: &mut impl Write) -> std::io::Result<()> {
        for inst in &self.instances {
            writeln!(w, "instance {} [{}]", inst.instance, inst.suite)?;
            match inst.hypothesis_met {
                Some(true) => writeln!(w, "  hypothesis: met")?,
                Some(false) => writeln!(w, "  hypothesis: NOT met")?,
                None => {}
            }
            for n in &inst.notes {
                writeln!(w, "  note: {}", n)?;
            }
            for r in &inst.rows {
                writeln!(
                    w,
                    "  i={} d={} lhs={} rhs={} {}{}",
                    r.i,
                    r.d,
                    r.lhs,
                    r.rhs,
                    r.verdict,
                    if r.stable { "" } else { " (unstable)" }
                )?;
            }
        }
        let (mut holds, mut viol, mut inc, mut exp) = (0usize, 0usize, 0usize, 0usize);
        for inst in &self.instances {
            for r in &inst.rows {
                match r.verdict {
                    Verdict::Holds => holds += 1,
                    Verdict::Violation => viol += 1,
                    Verdict::Inconclusive => inc += 1,
                    Verdict::ExpectedFail => exp += 1,
                }
            }
        }
        writeln!(
            w,
            "summary: {} instances, rows: {} holds, {} violations, {} inconclusive, {} expected-fail",
            self.instances.len(),
            holds,
            viol,
            inc,
            exp
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_gate() {
        assert_eq!(classify(true, false, false), Verdict::Holds);
        assert_eq!(classify(false, false, false), Verdict::Inconclusive);
        assert_eq!(classify(false, true, false), Verdict::Violation);
        assert_eq!(classify(false, true, true), Verdict::ExpectedFail);
    }

    #[test]
    fn exit_codes() {
        let mut rep = VerificationReport::default();
        let mut inst = InstanceReport::new("a", "green");
        inst.rows.push(ReportRow {
            i: 0,
            d: 1,
            lhs: 0,
            rhs: 1,
            verdict: Verdict::Holds,
            stable: true,
        });
        rep.push(inst.clone());
        assert_eq!(rep.exit_code(), 0);
        inst.rows[0].verdict = Verdict::Inconclusive;
        rep.push(inst.clone());
        assert_eq!(rep.exit_code(), 3);
        inst.rows[0].verdict = Verdict::Violation;
        rep.push(inst);
        assert_eq!(rep.exit_code(), 1);
    }

    #[test]
    fn tsv_shape() {
        let mut rep = VerificationReport::default();
        let mut inst = InstanceReport::new("x", "product");
        inst.rows.push(ReportRow {
            i: 0,
            d: 3,
            lhs: 5,
            rhs: 4,
            verdict: Verdict::Holds,
            stable: true,
        });
        rep.push(inst);
        let mut buf = Vec::new();
        rep.write_tsv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "x\tproduct\t0\t3\t5\t4\tholds\ttrue\n");
    }
}
