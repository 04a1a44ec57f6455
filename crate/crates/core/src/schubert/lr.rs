//! Littlewood–Richardson coefficients by direct tableau enumeration.

use num_bigint::BigInt;

use super::{partitions_in_box, Partition, SchubertCycle};

/// `c^ν_{λμ}`: the number of semistandard fillings of `ν/λ` with content
/// `μ` whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() + mu.weight() != nu.weight() {
        return 0;
    }
    if (0..nu.len().max(lambda.len())).any(|i| lambda.part(i) > nu.part(i)) {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    // cells of ν/λ in reading order: top row first, right to left
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = nu.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; nu.len()];
    let mut content = vec![0u32; mu.len() + 1];
    let mut count = 0u64;
    fill(0, &cells, lambda, mu, &mut grid, &mut content, &mut count);
    count
}

fn fill(
    idx: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    mu: &Partition,
    grid: &mut [Vec<u32>],
    content: &mut [u32],
    count: &mut u64,
) {
    if idx == cells.len() {
        *count += 1;
        return;
    }
    let (r, c) = cells[idx];
    // weakly increasing rows: bounded above by the right neighbour
    let mut hi = mu.len() as u32;
    if (c + 1) < grid[r].len() && grid[r][c + 1] != 0 {
        hi = hi.min(grid[r][c + 1]);
    }
    // strictly increasing columns: bounded below by the cell above
    let mut lo = 1u32;
    if r > 0 && c as u32 >= lambda.part(r - 1) {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    // an entry in row r is at most r+1
    hi = hi.min(r as u32 + 1);
    for v in lo..=hi {
        let vi = v as usize;
        if content[vi] >= mu.part(vi - 1) {
            continue;
        }
        if vi > 1 && content[vi] + 1 > content[vi - 1] {
            continue;
        }
        content[vi] += 1;
        grid[r][c] = v;
        fill(idx + 1, cells, lambda, mu, grid, content, count);
        grid[r][c] = 0;
        content[vi] -= 1;
    }
}

pub(super) fn multiply(x: &SchubertCycle, y: &SchubertCycle) -> SchubertCycle {
    let ctx = x.ctx;
    let mut out = SchubertCycle::zero(ctx);
    for (lambda, a) in &x.terms {
        for (mu, b) in &y.terms {
            let w = lambda.weight() + mu.weight();
            if w > ctx.dim() {
                continue;
            }
            for nu in partitions_in_box(w, ctx.rows(), ctx.cols()) {
                let c = lr_coefficient(lambda, mu, &nu);
                if c != 0 {
                    out.add_term(nu, BigInt::from(c) * a * b);
                }
            }
        }
    }
    out
}
