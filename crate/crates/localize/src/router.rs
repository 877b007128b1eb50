use circuit_core::{Circuit, Gate, Permutation, Result};

/// Swap-insertion router for one block on a linear chain.
///
/// Tracks which logical qubit sits on each physical line, emits adjacent
/// swaps to bring gate operands together, and finally sorts the lines to a
/// requested exit ordering with the minimal number of adjacent swaps.
pub struct Router {
    width: usize,
    /// `contents[phys0]` = logical qubit on physical line `phys0 + 1`.
    contents: Vec<usize>,
    /// `pos[logical - 1]` = 0-based physical line of the logical qubit.
    pos: Vec<usize>,
    gates: Vec<Gate>,
}

impl Router {
    pub fn new(width: usize, ordering_in: &Permutation) -> Self {
        let contents = ordering_in.line_contents();
        let mut pos = vec![0usize; width];
        for (phys0, &logical) in contents.iter().enumerate() {
            pos[logical - 1] = phys0;
        }
        Router {
            width,
            contents,
            pos,
            gates: Vec::new(),
        }
    }

    /// Swaps physical lines `i+1` and `i+2` (0-based `i`), emitting the gate.
    fn swap_adjacent(&mut self, i: usize) {
        self.gates.push(Gate::Swap { a: i + 1, b: i + 2 });
        self.contents.swap(i, i + 1);
        self.pos[self.contents[i] - 1] = i;
        self.pos[self.contents[i + 1] - 1] = i + 1;
    }

    /// Emits one gate of the unlowered block, relabelled to physical lines,
    /// preceded by whatever adjacent swaps are needed to make it local.
    pub fn route_gate(&mut self, g: &Gate) -> Result<()> {
        let logical = g.qubits();
        if logical.len() == 2 {
            let moving = logical[0]; // move the first operand toward the second
            let anchor = logical[1];
            loop {
                let pm = self.pos[moving - 1];
                let pa = self.pos[anchor - 1];
                if pm.abs_diff(pa) <= 1 {
                    break;
                }
                if pm < pa {
                    self.swap_adjacent(pm);
                } else {
                    self.swap_adjacent(pm - 1);
                }
            }
        }
        let relabeled = g.map_qubits(|q| self.pos[q - 1] + 1);
        relabeled.validate(self.width)?;
        self.gates.push(relabeled);
        Ok(())
    }

    /// Sorts the lines to the target ordering with adjacent swaps. The swap
    /// count equals the inversion distance between the current and target
    /// orderings, which is minimal for adjacent transpositions.
    pub fn sort_to(&mut self, target: &Permutation) -> Result<()> {
        let desired = target.line_contents();
        for i in 0..self.width {
            if self.contents[i] == desired[i] {
                continue;
            }
            let j = self.contents[i..]
                .iter()
                .position(|&q| q == desired[i])
                .expect("both orderings hold the same qubits")
                + i;
            for k in (i..j).rev() {
                self.swap_adjacent(k);
            }
        }
        Ok(())
    }

    pub fn into_circuit(self) -> Result<Circuit> {
        Circuit::new(self.width, self.gates)
    }
}
