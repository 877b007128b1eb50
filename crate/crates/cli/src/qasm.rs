//! OpenQASM 2.0 export and a small re-simulating interpreter.
//!
//! The export header defines the non-standard gates in terms of `u1`, `h`,
//! and `cx`:
//!
//! * `crx(theta) a,b` — controlled `Rx(theta)` via the Hadamard-conjugated
//!   controlled-`Rz` identity, with no stray phase;
//! * `swp a,b` — swap as three alternating CNOTs.
//!
//! Controlled 2^t-th roots of X are emitted as a `u1` on the control followed
//! by a `crx`, which is exactly their unfused form.
//!
//! The interpreter parses the emitted subset (including the `gate` bodies in
//! the header), expands every statement down to `u1`/`h`/`cx`, and runs the
//! dense statevector kernels, so an export can be checked against
//! [`sim::unitary_of`] without any external tooling.

use crate::{CliError, Result};
use circuit_core::{Circuit, DyadicAngle, Gate};
use sim::{apply_cnot, apply_hadamard, apply_phase, C64, UnitaryMatrix};
use std::collections::HashMap;
use std::fmt::Write as _;

/// Decimal with 17 significant digits: exact round trip for f64.
fn num(x: f64) -> String {
    format!("{:.16e}", x)
}

fn angle_of(a: DyadicAngle) -> String {
    num(a.to_radians())
}

/// Exports a circuit as OpenQASM 2.0 text.
pub fn export_qasm(c: &Circuit) -> Result<String> {
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\n");
    out.push_str("include \"qelib1.inc\";\n");
    out.push_str(
        "gate crx(theta) a,b { h b; u1(theta/2) b; cx a,b; u1(-theta/2) b; cx a,b; h b; }\n",
    );
    out.push_str("gate swp a,b { cx a,b; cx b,a; cx a,b; }\n");
    let _ = writeln!(out, "qreg q[{}];", c.width());
    for g in c.gates() {
        // QASM indices are 0-based: line i maps to q[i-1].
        match *g {
            Gate::Phase { qubit, angle } => {
                let _ = writeln!(out, "u1({}) q[{}];", angle_of(angle), qubit - 1);
            }
            Gate::Hadamard { qubit } => {
                let _ = writeln!(out, "h q[{}];", qubit - 1);
            }
            Gate::Cnot { control, target } => {
                let _ = writeln!(out, "cx q[{}],q[{}];", control - 1, target - 1);
            }
            Gate::Swap { a, b } => {
                let _ = writeln!(out, "swp q[{}],q[{}];", a - 1, b - 1);
            }
            Gate::ControlledRx {
                control,
                target,
                angle,
            } => {
                let _ = writeln!(
                    out,
                    "crx({}) q[{}],q[{}];",
                    angle_of(angle),
                    control - 1,
                    target - 1
                );
            }
            Gate::ControlledRootX { control, target, t }
            | Gate::ControlledRootXDagger { control, target, t } => {
                let sign = if matches!(g, Gate::ControlledRootX { .. }) {
                    1.0
                } else {
                    -1.0
                };
                let rx = sign * std::f64::consts::PI / f64::powi(2.0, t as i32);
                let _ = writeln!(out, "u1({}) q[{}];", num(rx / 2.0), control - 1);
                let _ = writeln!(out, "crx({}) q[{}],q[{}];", num(rx), control - 1, target - 1);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Expr {
    Num(f64),
    Pi,
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn eval(&self, env: &HashMap<String, f64>) -> Result<f64> {
        Ok(match self {
            Expr::Num(v) => *v,
            Expr::Pi => std::f64::consts::PI,
            Expr::Var(name) => *env
                .get(name)
                .ok_or_else(|| CliError::Qasm(format!("unbound parameter {name:?}")))?,
            Expr::Neg(e) => -e.eval(env)?,
            Expr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            Expr::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            Expr::Mul(a, b) => a.eval(env)? * b.eval(env)?,
            Expr::Div(a, b) => a.eval(env)? / b.eval(env)?,
        })
    }
}

/// One operand: either a register element `q[i]` or a formal argument name.
#[derive(Debug, Clone)]
enum Operand {
    Qubit(usize),
    Formal(String),
}

#[derive(Debug, Clone)]
struct Stmt {
    name: String,
    params: Vec<Expr>,
    operands: Vec<Operand>,
}

#[derive(Debug, Clone)]
struct GateDef {
    params: Vec<String>,
    args: Vec<String>,
    body: Vec<Stmt>,
}

#[derive(Debug)]
struct Program {
    width: usize,
    defs: HashMap<String, GateDef>,
    stmts: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(f64),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let src: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < src.len() {
        let c = src[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '/' && src.get(i + 1) == Some(&'/') {
            while i < src.len() && src[i] != '\n' {
                i += 1;
            }
        } else if c == '"' {
            // String literal (only used by `include`): skip its contents.
            i += 1;
            while i < src.len() && src[i] != '"' {
                i += 1;
            }
            i += 1;
            toks.push(Tok::Ident("<string>".to_string()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < src.len() && (src[i].is_ascii_alphanumeric() || src[i] == '_' || src[i] == '.')
            {
                i += 1;
            }
            // "OPENQASM 2.0" lexes the version as a number; '.' inside
            // identifiers only occurs there.
            toks.push(Tok::Ident(src[start..i].iter().collect()));
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < src.len()
                && (src[i].is_ascii_digit()
                    || src[i] == '.'
                    || src[i] == 'e'
                    || src[i] == 'E'
                    || ((src[i] == '+' || src[i] == '-')
                        && matches!(src[i - 1], 'e' | 'E')))
            {
                i += 1;
            }
            let text: String = src[start..i].iter().collect();
            let v: f64 = text
                .parse()
                .map_err(|_| CliError::Qasm(format!("bad number literal {text:?}")))?;
            toks.push(Tok::Num(v));
        } else {
            toks.push(Tok::Sym(c));
            i += 1;
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Result<Tok> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| CliError::Qasm("unexpected end of input".to_string()))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        match self.next()? {
            Tok::Sym(s) if s == c => Ok(()),
            other => Err(CliError::Qasm(format!("expected {c:?}, found {other:?}"))),
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.next()? {
            Tok::Ident(s) => Ok(s),
            other => Err(CliError::Qasm(format!(
                "expected identifier, found {other:?}"
            ))),
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        loop {
            if self.eat_sym('+') {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat_sym('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    // term := factor (('*'|'/') factor)*
    fn term(&mut self) -> Result<Expr> {
        let mut e = self.factor()?;
        loop {
            if self.eat_sym('*') {
                e = Expr::Mul(Box::new(e), Box::new(self.factor()?));
            } else if self.eat_sym('/') {
                e = Expr::Div(Box::new(e), Box::new(self.factor()?));
            } else {
                return Ok(e);
            }
        }
    }

    // factor := '-' factor | '(' expr ')' | number | 'pi' | identifier
    fn factor(&mut self) -> Result<Expr> {
        if self.eat_sym('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        if self.eat_sym('(') {
            let e = self.expr()?;
            self.expect_sym(')')?;
            return Ok(e);
        }
        match self.next()? {
            Tok::Num(v) => Ok(Expr::Num(v)),
            Tok::Ident(s) if s == "pi" => Ok(Expr::Pi),
            Tok::Ident(s) => Ok(Expr::Var(s)),
            other => Err(CliError::Qasm(format!(
                "expected expression, found {other:?}"
            ))),
        }
    }

    fn operand(&mut self) -> Result<Operand> {
        let name = self.ident()?;
        if self.eat_sym('[') {
            let idx = match self.next()? {
                Tok::Num(v) if v.fract() == 0.0 && v >= 0.0 => v as usize,
                other => {
                    return Err(CliError::Qasm(format!(
                        "expected register index, found {other:?}"
                    )))
                }
            };
            self.expect_sym(']')?;
            if name != "q" {
                return Err(CliError::Qasm(format!("unknown register {name:?}")));
            }
            Ok(Operand::Qubit(idx))
        } else {
            Ok(Operand::Formal(name))
        }
    }

    // statement := name ('(' expr-list ')')? operand-list ';'
    fn stmt(&mut self, name: String) -> Result<Stmt> {
        let mut params = Vec::new();
        if self.eat_sym('(') {
            if !self.eat_sym(')') {
                loop {
                    params.push(self.expr()?);
                    if self.eat_sym(')') {
                        break;
                    }
                    self.expect_sym(',')?;
                }
            }
        }
        let mut operands = vec![self.operand()?];
        while self.eat_sym(',') {
            operands.push(self.operand()?);
        }
        self.expect_sym(';')?;
        Ok(Stmt {
            name,
            params,
            operands,
        })
    }

    fn gate_def(&mut self) -> Result<(String, GateDef)> {
        let name = self.ident()?;
        let mut params = Vec::new();
        if self.eat_sym('(') {
            if !self.eat_sym(')') {
                loop {
                    params.push(self.ident()?);
                    if self.eat_sym(')') {
                        break;
                    }
                    self.expect_sym(',')?;
                }
            }
        }
        let mut args = vec![self.ident()?];
        while self.eat_sym(',') {
            args.push(self.ident()?);
        }
        self.expect_sym('{')?;
        let mut body = Vec::new();
        while !self.eat_sym('}') {
            let stmt_name = self.ident()?;
            body.push(self.stmt(stmt_name)?);
        }
        Ok((name, GateDef { params, args, body }))
    }

    fn program(&mut self) -> Result<Program> {
        let mut defs = HashMap::new();
        let mut stmts = Vec::new();
        let mut width = None;
        while self.peek().is_some() {
            let head = self.ident()?;
            match head.as_str() {
                "OPENQASM" => {
                    self.next()?; // version number
                    self.expect_sym(';')?;
                }
                "include" => {
                    self.next()?; // file-name string
                    self.expect_sym(';')?;
                }
                "gate" => {
                    let (name, def) = self.gate_def()?;
                    defs.insert(name, def);
                }
                "qreg" => {
                    match self.operand()? {
                        Operand::Qubit(n) => width = Some(n),
                        other => {
                            return Err(CliError::Qasm(format!(
                                "bad qreg declaration: {other:?}"
                            )))
                        }
                    }
                    self.expect_sym(';')?;
                }
                _ => {
                    let width = width
                        .ok_or_else(|| CliError::Qasm("statement before qreg".to_string()))?;
                    let s = self.stmt(head)?;
                    for op in &s.operands {
                        match op {
                            Operand::Qubit(i) if *i < width => {}
                            other => {
                                return Err(CliError::Qasm(format!(
                                    "operand {other:?} out of range for qreg q[{width}]"
                                )))
                            }
                        }
                    }
                    stmts.push(s);
                }
            }
        }
        Ok(Program {
            width: width.ok_or_else(|| CliError::Qasm("missing qreg declaration".to_string()))?,
            defs,
            stmts,
        })
    }
}

// ---------------------------------------------------------------------------
// Interpretation
// ---------------------------------------------------------------------------

fn apply_stmt(
    state: &mut [C64],
    n: usize,
    stmt: &Stmt,
    defs: &HashMap<String, GateDef>,
    env: &HashMap<String, f64>,
    bind: &HashMap<String, usize>,
) -> Result<()> {
    let lines: Vec<usize> = stmt
        .operands
        .iter()
        .map(|op| match op {
            // QASM q[i] is our line i+1 (1-based, MSB first).
            Operand::Qubit(i) => Ok(i + 1),
            Operand::Formal(name) => bind
                .get(name)
                .copied()
                .ok_or_else(|| CliError::Qasm(format!("unbound gate argument {name:?}"))),
        })
        .collect::<Result<_>>()?;
    let values: Vec<f64> = stmt
        .params
        .iter()
        .map(|e| e.eval(env))
        .collect::<Result<_>>()?;
    match stmt.name.as_str() {
        "u1" => apply_phase(state, n, lines[0], values[0]),
        "h" => apply_hadamard(state, n, lines[0]),
        "cx" => apply_cnot(state, n, lines[0], lines[1]),
        name => {
            let def = defs
                .get(name)
                .ok_or_else(|| CliError::Qasm(format!("unknown gate {name:?}")))?;
            if def.params.len() != values.len() || def.args.len() != lines.len() {
                return Err(CliError::Qasm(format!("arity mismatch for gate {name:?}")));
            }
            let inner_env: HashMap<String, f64> =
                def.params.iter().cloned().zip(values).collect();
            let inner_bind: HashMap<String, usize> =
                def.args.iter().cloned().zip(lines).collect();
            for s in &def.body {
                apply_stmt(state, n, s, defs, &inner_env, &inner_bind)?;
            }
        }
    }
    Ok(())
}

/// Parses QASM text and returns the unitary of the expanded program.
pub fn simulate_qasm(text: &str) -> Result<UnitaryMatrix> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let prog = parser.program()?;
    let n = prog.width;
    if n == 0 || n > 14 {
        return Err(CliError::Qasm(format!("unsupported register size {n}")));
    }
    let dim = 1usize << n;
    let mut m = UnitaryMatrix::zeros(dim);
    let mut col = vec![C64::new(0.0, 0.0); dim];
    let env = HashMap::new();
    let bind = HashMap::new();
    for j in 0..dim {
        col.iter_mut().for_each(|v| *v = C64::new(0.0, 0.0));
        col[j] = C64::new(1.0, 0.0);
        for s in &prog.stmts {
            apply_stmt(&mut col, n, s, &prog.defs, &env, &bind)?;
        }
        for (r, &v) in col.iter().enumerate() {
            m.set(r, j, v);
        }
    }
    Ok(m)
}
