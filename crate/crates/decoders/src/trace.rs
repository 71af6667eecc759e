//! Per-iteration decoder trace.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeOutcome {
    /// Decoder converged to a zero syndrome at this iteration.
    Success(usize),
    Failure,
}

/// Record of one decoding attempt. Iteration 0 is the raw channel decision;
/// iteration t > 0 is the hard decision after the t-th message-passing round.
///
/// Hard decisions are not stored explicitly: the decision at iteration t is
/// `transmitted XOR support(t)`, so the sparse error supports carry the whole
/// trace.
#[derive(Debug, Clone)]
pub struct DecodeTrace {
    pub n: usize,
    /// Error support per iteration: sorted variable indices where the hard
    /// decision differs from the transmitted word.
    pub supports: Vec<Vec<u32>>,
    pub outcome: DecodeOutcome,
    /// Smallest period p <= 4 such that the last two supports repeat the two
    /// p steps before them; only set on failure.
    pub oscillation_period: Option<usize>,
}

impl DecodeTrace {
    pub fn iterations(&self) -> usize {
        self.supports.len()
    }

    pub fn final_support(&self) -> &[u32] {
        self.supports.last().expect("trace has at least iteration 0")
    }

    /// Hard-decision vector at iteration `t`, reconstructed from the support.
    pub fn hard_decision(&self, t: usize, transmitted: &[bool]) -> Vec<bool> {
        let mut word = transmitted.to_vec();
        for &v in &self.supports[t] {
            word[v as usize] = !word[v as usize];
        }
        word
    }

    pub fn is_success(&self) -> bool {
        matches!(self.outcome, DecodeOutcome::Success(_))
    }

    /// Detect the oscillation period from the recorded supports.
    pub(crate) fn detect_oscillation(supports: &[Vec<u32>]) -> Option<usize> {
        let t = supports.len().checked_sub(1)?;
        for p in 1..=4 {
            if t >= p + 1
                && supports[t] == supports[t - p]
                && supports[t - 1] == supports[t - 1 - p]
            {
                return Some(p);
            }
        }
        None
    }

    /// Union of supports over the terminal phase: the periodic suffix when an
    /// oscillation was detected, otherwise the final support alone.
    pub fn terminal_support_union(&self) -> Vec<u32> {
        let t = self.supports.len() - 1;
        let period = self.oscillation_period.unwrap_or(1);
        let mut union: Vec<u32> = Vec::new();
        for s in &self.supports[t + 1 - period..] {
            union.extend_from_slice(s);
        }
        union.sort_unstable();
        union.dedup();
        union
    }
}
