/// Tally of a sampled verification run, with witnesses for failures.
///
/// Witnesses are preformatted strings (typically JSON fragments built from
/// exact scalar literals) so a failing configuration can be replayed.  At
/// most [`CheckOutcome::MAX_WITNESSES`] are retained.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckOutcome {
    pub passed: u64,
    pub failed: u64,
    pub witnesses: Vec<String>,
}

impl CheckOutcome {
    pub const MAX_WITNESSES: usize = 10;

    pub fn new() -> Self {
        CheckOutcome::default()
    }

    pub fn pass(&mut self) {
        self.passed += 1;
    }

    pub fn fail(&mut self, witness: String) {
        self.failed += 1;
        if self.witnesses.len() < Self::MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    /// Record one comparison, keeping the witness only on failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass();
        } else {
            self.fail(witness());
        }
    }

    pub fn is_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn samples(&self) -> u64 {
        self.passed + self.failed
    }

    /// Fold another outcome into this one, respecting the witness cap.
    pub fn merge(&mut self, other: CheckOutcome) {
        self.passed += other.passed;
        self.failed += other.failed;
        for w in other.witnesses {
            if self.witnesses.len() < Self::MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_cap_holds() {
        let mut o = CheckOutcome::new();
        for k in 0..25 {
            o.fail(format!("w{k}"));
        }
        o.pass();
        assert_eq!(o.failed, 25);
        assert_eq!(o.passed, 1);
        assert_eq!(o.samples(), 26);
        assert_eq!(o.witnesses.len(), CheckOutcome::MAX_WITNESSES);
        assert!(!o.is_pass());
    }
}
