//! Closed-form values for friendship graphs and corona products, in exact
//! integer arithmetic. These are the expected side of verifier comparisons.

use serde::Serialize;

/// Distinguishing number of `F_n`: the least `j` with `j(j-1)/2 >= n`,
/// i.e. `⌈(1 + √(8n+1)) / 2⌉`.
pub fn friendship_distinguishing_number(n: u64) -> u64 {
    assert!(n >= 2, "friendship graphs need n >= 2");
    // j = isqrt(2n) still has j(j-1)/2 < n
    let mut j = (2 * n).isqrt();
    while j * (j - 1) / 2 < n {
        j += 1;
    }
    j
}

/// `k_j`: the fewest triangles for which `F_n` needs `j` labels,
/// `⌊(j² - 3j + 2)/2⌋ + 1`.
pub fn min_copies_for_labels(j: u64) -> u64 {
    assert!(j >= 3, "defined for j >= 3");
    (j * j - 3 * j + 2) / 2 + 1
}

/// Cost of `F_n` as `i + 1` where `n = k_j + i`, `j = D(F_n)`. `None` if
/// `i` falls outside `0..=j-2`, which the closed form does not cover.
pub fn friendship_cost(n: u64) -> Option<u64> {
    let j = friendship_distinguishing_number(n);
    let i = n - min_copies_for_labels(j);
    (i + 2 <= j).then_some(i + 1)
}

pub fn friendship_determining_number(n: u64) -> u64 {
    n
}

/// `|Det(F_n) - ρ(F_n)|` from the closed forms.
pub fn friendship_gap(n: u64) -> Option<u64> {
    friendship_cost(n).map(|rho| friendship_determining_number(n).abs_diff(rho))
}

/// `Det(G) + n·Det(H)` for `G` of order `n`.
pub fn corona_determining_number(det_g: u64, n: u64, det_h: u64) -> u64 {
    det_g + n * det_h
}

/// `Det(G ∘ K_1) = Det(G)`.
pub fn corona_determining_number_k1(det_g: u64) -> u64 {
    det_g
}

/// Upper bound `ρ(G) + n·ρ(H)` on the cost of `G ∘ H`; meaningful only when
/// `D(G ∘ H) = max{D(G), D(H)}`.
pub fn corona_cost_bound(rho_g: u64, n: u64, rho_h: u64) -> u64 {
    rho_g + n * rho_h
}

/// Whether the corona cost bound applies: `D(G∘H)` must equal
/// `max{D(G), D(H)}`.
pub fn corona_cost_bound_applies(d_g: u64, d_h: u64, d_corona: u64) -> bool {
    d_corona == d_g.max(d_h)
}

/// Closed-form facts about one friendship graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FriendshipFacts {
    pub n: u64,
    pub d: u64,
    pub k: u64,
    pub i: u64,
    pub rho: Option<u64>,
    pub det: u64,
}

impl FriendshipFacts {
    pub fn of(n: u64) -> Self {
        let d = friendship_distinguishing_number(n);
        let k = min_copies_for_labels(d);
        FriendshipFacts {
            n,
            d,
            k,
            i: n - k,
            rho: friendship_cost(n),
            det: friendship_determining_number(n),
        }
    }
}
