use circuit_core::{Circuit, CircuitError, DyadicAngle, Gate, Result};

/// One controlled-Rx gate of the backbone as a (control, target, angle) triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Crx {
    control: usize,
    target: usize,
    angle: DyadicAngle,
}

impl Crx {
    fn gate(&self) -> Gate {
        Gate::ControlledRx {
            control: self.control,
            target: self.target,
            angle: self.angle,
        }
    }
}

/// Positive "downward" mesh: for each level `m = n..2`, a stair of controls
/// `k = m-1..2` with angle `+pi/2^{m-k}` targeting `m`, closed by the control-1
/// gate `(1, m)` with angle `+pi/2^{max(m-2, 0)}`.
fn down(n: usize) -> Vec<Crx> {
    let mut out = Vec::new();
    for m in (2..=n).rev() {
        for k in (2..m).rev() {
            out.push(Crx {
                control: k,
                target: m,
                angle: DyadicAngle::positive((m - k) as u32),
            });
        }
        out.push(Crx {
            control: 1,
            target: m,
            angle: DyadicAngle::positive(m.saturating_sub(2) as u32),
        });
    }
    out
}

/// Negative mesh: rows `j = 2..n-1`, each targeting levels `m = n..j+1` with
/// angle `-pi/2^{m-j}`.
fn neg(n: usize) -> Vec<Crx> {
    let mut out = Vec::new();
    for j in 2..n {
        for m in ((j + 1)..=n).rev() {
            out.push(Crx {
                control: j,
                target: m,
                angle: DyadicAngle::negative((m - j) as u32),
            });
        }
    }
    out
}

/// Inverse of a controlled-Rx word: reversed order, negated angles.
fn inverse(word: &[Crx]) -> Vec<Crx> {
    word.iter()
        .rev()
        .map(|g| Crx {
            angle: g.angle.negated(),
            ..*g
        })
        .collect()
}

/// The four pipelined sections of the backbone, in order.
///
/// Gates within each mesh are scheduled along anti-diagonals (constant
/// `control + target` within a mesh), which pipelines the four triangles into
/// exactly `(2n-3) + (2n-5) + (2n-5) + (2n-7) = 8n-20` greedy layers.
fn pipelined_sections(n: usize) -> [Vec<Crx>; 4] {
    let mut a = down(n);
    a.sort_by_key(|g| (2 * n - g.control - g.target, g.control));

    let mut b = neg(n);
    b.sort_by_key(|g| (g.control + g.target, g.control));

    let m = n - 1;
    let mut c = inverse(&neg(m));
    c.sort_by_key(|g| (std::cmp::Reverse(g.control + g.target), g.control));

    let mut d = inverse(&down(m));
    d.sort_by_key(|g| (std::cmp::Reverse(2 * m - g.control - g.target), g.control));

    [a, b, c, d]
}

/// The eight named parts of the decomposition, in circuit order.
#[derive(Debug, Clone)]
pub struct ToffoliPlan {
    pub n: usize,
    pub p1: Circuit,
    pub c1: Circuit,
    pub c2: Circuit,
    pub c3: Circuit,
    pub p2: Circuit,
    pub c4: Circuit,
    pub c5: Circuit,
    pub c6: Circuit,
}

impl ToffoliPlan {
    /// The controlled-Rx backbone `C1 + C2 + ... + C6`.
    pub fn backbone(&self) -> Circuit {
        Circuit::compose_all(self.n, [&self.c1, &self.c2, &self.c3, &self.c4, &self.c5, &self.c6])
            .expect("parts share one width")
    }

    /// The full eight-part circuit `P1 + C1 + C2 + C3 + P2 + C4 + C5 + C6`.
    pub fn full(&self) -> Circuit {
        Circuit::compose_all(
            self.n,
            [
                &self.p1, &self.c1, &self.c2, &self.c3, &self.p2, &self.c4, &self.c5, &self.c6,
            ],
        )
        .expect("parts share one width")
    }
}

fn require_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(CircuitError::UnsupportedWidth { n, min: 3 });
    }
    Ok(())
}

fn circuit_of(n: usize, word: &[Crx]) -> Circuit {
    Circuit::new(n, word.iter().map(Crx::gate).collect()).expect("generated gates are in range")
}

/// Phase layer partner: `S(angle/2)` on the control line of an on-target-n
/// controlled-Rx, as dictated by the fusion identity.
fn phase_partner(g: &Crx) -> Gate {
    Gate::Phase {
        qubit: g.control,
        angle: g.angle.halved(),
    }
}

/// Builds the eight-part plan for the n-qubit Toffoli decomposition.
pub fn plan(n: usize) -> Result<ToffoliPlan> {
    require_n(n)?;
    let [a, b, c, d] = pipelined_sections(n);

    // C2 is the single control-1 gate on target n; C1 is everything of the
    // first mesh scheduled before it (all other on-target-n positives land
    // there), and C3 takes the rest of the positives plus the negative mesh.
    let cut2 = a
        .iter()
        .position(|g| g.control == 1 && g.target == n)
        .expect("control-1 gate on target n always present");
    let c1 = &a[..cut2];
    let c2 = &a[cut2..=cut2];
    let mut c3 = a[cut2 + 1..].to_vec();
    c3.extend_from_slice(&b);

    // Mirror split on the way back up: C5 is the single control-1 gate on
    // target n-1 inside the inverse mesh.
    let cut5 = d
        .iter()
        .position(|g| g.control == 1 && g.target == n - 1)
        .expect("control-1 gate on target n-1 always present");
    let mut c4 = c.clone();
    c4.extend_from_slice(&d[..cut5]);
    let c5 = &d[cut5..=cut5];
    let c6 = &d[cut5 + 1..];

    // Phase layers: one S(theta/2) on the control of every controlled-Rx
    // acting on line n; positives (in C1 and C2) feed P1, negatives (in C3)
    // feed P2. Emitted in ascending line order for determinism.
    let mut p1: Vec<Gate> = a
        .iter()
        .filter(|g| g.target == n)
        .map(phase_partner)
        .collect();
    let mut p2: Vec<Gate> = b
        .iter()
        .filter(|g| g.target == n)
        .map(phase_partner)
        .collect();
    let line_of = |g: &Gate| g.qubits()[0];
    p1.sort_by_key(line_of);
    p2.sort_by_key(line_of);

    Ok(ToffoliPlan {
        n,
        p1: Circuit::new(n, p1)?,
        c1: circuit_of(n, c1),
        c2: circuit_of(n, c2),
        c3: circuit_of(n, &c3),
        p2: Circuit::new(n, p2)?,
        c4: circuit_of(n, &c4),
        c5: circuit_of(n, c5),
        c6: circuit_of(n, c6),
    })
}

/// The controlled-Rx-only backbone. Its unitary is the n-qubit
/// controlled-`Rx(pi)` gate: a relative-phase variant of the Toffoli whose
/// bottom block is `-iX` (it differs from both the Toffoli and the
/// controlled-ZX matrix by a controlled phase).
pub fn gen_czx(n: usize) -> Result<Circuit> {
    Ok(plan(n)?.backbone())
}

/// The two phase layers `(P1, P2)`: `2n-3` phase gates in total.
pub fn gen_phase_layers(n: usize) -> Result<(Circuit, Circuit)> {
    let p = plan(n)?;
    Ok((p.p1, p.p2))
}

/// The full decomposition; its unitary equals the n-qubit Toffoli up to one
/// global phase.
pub fn gen_toffoli(n: usize) -> Result<Circuit> {
    Ok(plan(n)?.full())
}

/// The decomposition with every (phase, controlled-Rx) partner pair replaced
/// by its fused controlled-root-of-X gate: same unitary as [`gen_toffoli`],
/// no separate phase gates.
pub fn gen_toffoli_fused(n: usize) -> Result<Circuit> {
    require_n(n)?;
    let [a, b, c, d] = pipelined_sections(n);
    let mut gates = Vec::new();
    for section in [&a, &b] {
        for g in section.iter() {
            if g.target == n {
                let t = g.angle.k();
                gates.push(if g.angle.sign() > 0 {
                    Gate::ControlledRootX {
                        control: g.control,
                        target: g.target,
                        t,
                    }
                } else {
                    Gate::ControlledRootXDagger {
                        control: g.control,
                        target: g.target,
                        t,
                    }
                });
            } else {
                gates.push(g.gate());
            }
        }
    }
    for section in [&c, &d] {
        gates.extend(section.iter().map(Crx::gate));
    }
    Circuit::new(n, gates)
}
