use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// A target solution `y` with its value and the value of its back-mapped
/// source solution `y'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MappedSolution {
    pub target_value: u64,
    pub source_value: u64,
}

/// Optima of a source and a target instance plus enumerated target
/// solutions mapped back to the source.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LReductionInstance {
    pub source_opt: u64,
    pub target_opt: u64,
    pub solutions: Vec<MappedSolution>,
}

/// Checks `opt2 <= alpha * opt1` and
/// `|opt1 - m1(y')| <= beta * |opt2 - m2(y)|` for every listed solution.
pub fn verify_l_reduction(inst: &LReductionInstance, alpha: Ratio<u64>, beta: Ratio<u64>) -> bool {
    let int = Ratio::from_integer;
    int(inst.target_opt) <= alpha * int(inst.source_opt)
        && inst.solutions.iter().all(|s| {
            int(inst.source_opt.abs_diff(s.source_value))
                <= beta * int(inst.target_opt.abs_diff(s.target_value))
        })
}
