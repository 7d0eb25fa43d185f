use crate::args::{BasisArgs, Cli, Command, MatrixCommand, SingularCommand, TableKind};
use crate::report::*;
use crate::Output;
use pbnf::basis::{closure, synthesize_formula, SynthError};
use pbnf::families::family_table;
use pbnf::poly::{op_matrix, PolyMatrix2};
use pbnf::semantics::truth_vector_over;
use pbnf::singular::{
    apply_singular, apply_to_binary, de_morgan_checks, klein_table, on_p, singular_table_diff, value_add, ClauseSource,
    Pair, PRINTED_COLUMNS,
};
use pbnf::transform::StepKind;
use pbnf::{
    classify, equal_condition, equivalent, fiber, parse, parse_poly, pbnf, poly_to_vector, proof_trace, Assignment,
    Class, Family, Formula, OperatorId, Poly, Style, UnaryOp,
};
use serde::Serialize;

enum Failure {
    Usage(String),
    Syntax { input: String, message: String, position: usize },
}

impl Failure {
    fn render(&self) -> String {
        match self {
            Failure::Usage(m) => format!("error: {m}\n"),
            Failure::Syntax { input, message, position } => {
                format!("error: {message}\n  {input}\n  {}^\n", " ".repeat(*position))
            }
        }
    }
}

type Outcome = Result<Output, Failure>;

pub(crate) fn dispatch(cli: &Cli) -> Output {
    let result = match &cli.command {
        Command::Transform { formula, trace } => transform(cli, formula, *trace),
        Command::Prove { formula } => prove(cli, formula),
        Command::Equiv { left, right } => equiv(cli, left, right),
        Command::Solve { left, right } => solve(cli, left, right),
        Command::Fiber { polynomial } => fiber_cmd(cli, polynomial),
        Command::Table { kind } => Ok(table(cli, *kind)),
        Command::Basis { basis, target } => basis_cmd(cli, basis, target.as_deref()),
        Command::Synth { formula, basis } => synth(cli, formula, basis),
        Command::Singular(SingularCommand::Apply { operator, formula }) => singular_apply(cli, *operator, formula),
        Command::Singular(SingularCommand::Tables) => Ok(singular_tables(cli)),
        Command::Singular(SingularCommand::Demi) => Ok(demi(cli)),
        Command::Matrix(MatrixCommand::Op { operator }) => matrix_op(cli, *operator),
        Command::Matrix(MatrixCommand::Mul { left, right }) => matrix_mul(cli, left, right),
    };
    result.unwrap_or_else(|f| Output { code: 2, stdout: String::new(), stderr: f.render() })
}

fn emit<T: Serialize + Render>(cli: &Cli, command: &str, body: T, code: i32) -> Output {
    let stdout = if cli.json {
        let mut s = serde_json::to_string_pretty(&Envelope::new(command, &body)).expect("reports serialize");
        s.push('\n');
        s
    } else {
        body.text()
    };
    Output { code, stdout, stderr: String::new() }
}

fn formula(input: &str) -> Result<Formula, Failure> {
    parse(input).map_err(|e| Failure::Syntax {
        input: input.to_string(),
        message: e.kind.to_string(),
        position: e.position,
    })
}

fn polynomial(input: &str) -> Result<Poly, Failure> {
    parse_poly(input).map_err(|e| Failure::Syntax {
        input: input.to_string(),
        message: e.message,
        position: e.position,
    })
}

fn row(a: &Assignment) -> Row {
    a.iter().map(|(k, v)| (k.to_string(), u8::from(v))).collect()
}

fn family(cli: &Cli) -> Family {
    cli.family.unwrap_or(Family::Normal)
}

fn unary_glyph(op: UnaryOp, style: Style) -> &'static str {
    match style {
        Style::Ascii => op.ascii(),
        Style::Unicode => op.unicode(),
    }
}

fn op_glyph(op: OperatorId, style: Style) -> String {
    match (op, style) {
        (OperatorId::Const(b), _) => u8::from(b).to_string(),
        (OperatorId::Unary(u), s) => unary_glyph(u, s).to_string(),
        (OperatorId::Binary(b), Style::Ascii) => b.ascii().to_string(),
        (OperatorId::Binary(b), Style::Unicode) => b.unicode().to_string(),
    }
}

/// Reprints a unicode label in the requested style.
fn restyle(label: &str, style: Style) -> String {
    if style == Style::Unicode {
        return label.to_string();
    }
    match label {
        "p′" => "p'".into(),
        "q′" => "q'".into(),
        "ι₁" => "iota1".into(),
        "ι₀" => "iota0".into(),
        _ => parse(label).map_or_else(|_| label.to_string(), |f| f.to_string_styled(style)),
    }
}

fn transform(cli: &Cli, input: &str, trace: bool) -> Outcome {
    let f = formula(input)?;
    let fam = family(cli);
    let poly = pbnf(&f, fam);
    let vars = f.letters();
    let vector = poly_to_vector(&poly, &vars).expect("a formula's polynomial uses only its letters");
    let verdict = classify(&f, fam);
    let trace = trace.then(|| {
        proof_trace(&f, fam)
            .into_iter()
            .map(|s| TraceStep {
                kind: match s.kind {
                    StepKind::Leaf => "leaf",
                    StepKind::Apply => "apply",
                    StepKind::Family => "family",
                }
                .into(),
                subformula: s.subformula,
                template: s.template,
                substituted: s.substituted,
                result: s.result.to_string(),
            })
            .collect()
    });
    let body = Transform {
        formula: f.to_string_styled(cli.style),
        family: fam.to_string(),
        polynomial: poly.to_string(),
        vars,
        vector: vector.to_string(),
        class: verdict.class.to_string(),
        witness: verdict.falsifying.as_ref().map(row),
        trace,
    };
    Ok(emit(cli, "transform", body, 0))
}

fn prove(cli: &Cli, input: &str) -> Outcome {
    let f = formula(input)?;
    let fam = family(cli);
    let verdict = classify(&f, fam);
    let tautology = verdict.class == Class::Tautology;
    let body = Prove {
        formula: f.to_string_styled(cli.style),
        family: fam.to_string(),
        polynomial: verdict.poly.to_string(),
        class: verdict.class.to_string(),
        tautology,
        witness: verdict.falsifying.as_ref().map(row),
    };
    Ok(emit(cli, "prove", body, if tautology { 0 } else { 1 }))
}

fn equiv(cli: &Cli, left: &str, right: &str) -> Outcome {
    let (f, g) = (formula(left)?, formula(right)?);
    let e = equivalent(&f, &g);
    let body = Equiv {
        left: f.to_string_styled(cli.style),
        right: g.to_string_styled(cli.style),
        left_polynomial: e.left.to_string(),
        right_polynomial: e.right.to_string(),
        equivalent: e.equivalent,
        witness: e.witness.as_ref().map(row),
    };
    Ok(emit(cli, "equiv", body, if e.equivalent { 0 } else { 1 }))
}

fn solve(cli: &Cli, left: &str, right: &str) -> Outcome {
    let (f, g) = (formula(left)?, formula(right)?);
    let c = equal_condition(&f, &g).map_err(|e| Failure::Usage(e.to_string()))?;
    let code = if c.solutions.is_empty() { 1 } else { 0 };
    let body = Solve {
        left: f.to_string_styled(cli.style),
        right: g.to_string_styled(cli.style),
        vars: c.vars,
        condition: c.condition.to_string(),
        description: c.description,
        solutions: c.solutions.iter().map(row).collect(),
    };
    Ok(emit(cli, "solve", body, code))
}

fn fiber_cmd(cli: &Cli, input: &str) -> Outcome {
    let poly = polynomial(input)?;
    let fam = family(cli);
    let fib = fiber(&poly, fam).map_err(|e| Failure::Usage(e.to_string()))?;
    let body = FiberReport {
        polynomial: poly.to_string(),
        family: fam.to_string(),
        operator: fib.binary.name().to_string(),
        statement: fib.statement().to_string_styled(cli.style),
        degenerate: fib.is_degenerate(),
        renamed: fib.renamed.iter().map(|(a, b)| [a.clone(), b.clone()]).collect(),
    };
    Ok(emit(cli, "fiber", body, 0))
}

fn table(cli: &Cli, kind: TableKind) -> Output {
    let style = cli.style;
    match kind {
        TableKind::Families => {
            let fams = cli.family.map_or(Family::ALL.to_vec(), |f| vec![f]);
            let families = fams
                .into_iter()
                .map(|fam| FamilyBlock {
                    family: fam.to_string(),
                    symbol: fam.symbol().to_string(),
                    signature: fam.signature().to_string(),
                    rows: family_table(fam)
                        .into_iter()
                        .map(|r| FamilyRow {
                            label: restyle(&r.label, style),
                            operator: r.op.name().to_string(),
                            template: r.template.to_string(),
                            polynomial: r.poly.to_string(),
                            vector: r.vector.to_string(),
                        })
                        .collect(),
                })
                .collect();
            emit(cli, "table", FamilyTable { families }, 0)
        }
        TableKind::Klein => {
            let table = klein_table();
            let body = KleinTable {
                operators: UnaryOp::ALL.iter().map(|&u| unary_glyph(u, style).to_string()).collect(),
                composition: table
                    .iter()
                    .map(|r| r.iter().map(|&u| unary_glyph(u, style).to_string()).collect())
                    .collect(),
                on_p: table.iter().map(|r| r.iter().map(|&u| restyle(on_p(u), style)).collect()).collect(),
            };
            emit(cli, "table", body, 0)
        }
        TableKind::Values => {
            let body = ValueTable {
                pairs: Pair::ALL.iter().map(Pair::to_string).collect(),
                sums: Pair::ALL
                    .iter()
                    .map(|&x| Pair::ALL.iter().map(|&y| value_add(x, y).to_string()).collect())
                    .collect(),
                four_values: Pair::ALL
                    .iter()
                    .map(|x| {
                        let v = x.four_value();
                        format!("{} {}", v.symbol(), v.label())
                    })
                    .collect(),
            };
            emit(cli, "table", body, 0)
        }
    }
}

fn synthesis(cli: &Cli, target: &str, basis: &BasisArgs) -> Result<Synthesis, Failure> {
    let f = formula(target)?;
    let pq = ["p".to_string(), "q".to_string()];
    let vector = truth_vector_over(&f, &pq)
        .map_err(|_| Failure::Usage(format!("--target must be a formula over p and q, got {target:?}")))?;
    let mut out = Synthesis {
        target: f.to_string_styled(cli.style),
        vector: Some(vector.to_string()),
        formula: None,
        depth: None,
        error: None,
    };
    match synthesize_formula(&f, &basis.ops, basis.depth, basis.constants) {
        Ok(g) => {
            out.depth = Some(g.depth());
            out.formula = Some(g.to_string_styled(cli.style));
        }
        Err(e @ (SynthError::Incomplete { .. } | SynthError::DepthCapped { .. })) => out.error = Some(e.to_string()),
        Err(e) => return Err(Failure::Usage(e.to_string())),
    }
    Ok(out)
}

fn basis_cmd(cli: &Cli, basis: &BasisArgs, target: Option<&str>) -> Outcome {
    let c = closure(&basis.ops, basis.constants);
    let target = target.map(|t| synthesis(cli, t, basis)).transpose()?;
    let code = match &target {
        Some(t) => i32::from(t.formula.is_none()),
        None => i32::from(!c.complete),
    };
    let body = Basis {
        ops: basis.ops.iter().map(|&op| op_glyph(op, cli.style)).collect(),
        constants: basis.constants,
        complete: c.complete,
        rounds: c.generations,
        reached: c
            .witnesses
            .iter()
            .rev()
            .map(|(bits, w)| BasisEntry {
                vector: pbnf::TruthVector::binary(*bits).to_string(),
                depth: c.depths[bits],
                witness: w.to_string_styled(cli.style),
            })
            .collect(),
        missing: c.missing().iter().map(|v| v.to_string()).collect(),
        target,
    };
    Ok(emit(cli, "basis", body, code))
}

fn synth(cli: &Cli, target: &str, basis: &BasisArgs) -> Outcome {
    let result = synthesis(cli, target, basis)?;
    let code = i32::from(result.formula.is_none());
    let body = Synth {
        ops: basis.ops.iter().map(|&op| op_glyph(op, cli.style)).collect(),
        constants: basis.constants,
        depth_cap: basis.depth,
        result,
    };
    Ok(emit(cli, "synth", body, code))
}

fn singular_apply(cli: &Cli, op: UnaryOp, input: &str) -> Outcome {
    let f = formula(input)?;
    let operator = unary_glyph(op, cli.style).to_string();
    let formula = f.to_string_styled(cli.style);
    let body = match apply_to_binary(op, &f) {
        Ok(a) => SingularApply {
            operator,
            formula,
            letter: a.letter.clone(),
            polynomial: a.poly.to_string(),
            connective: Some(a.fiber.binary.name().to_string()),
            statement: Some(a.statement().to_string_styled(cli.style)),
        },
        Err(_) => {
            let letter = f.letters().into_iter().next().unwrap_or_else(|| "p".into());
            let poly = apply_singular(op, &pbnf(&f, Family::Normal), &letter);
            SingularApply { operator, formula, letter, polynomial: poly.to_string(), connective: None, statement: None }
        }
    };
    Ok(emit(cli, "singular-apply", body, 0))
}

fn singular_tables(cli: &Cli) -> Output {
    let style = cli.style;
    let diff = singular_table_diff();
    let mismatches = diff.iter().filter(|c| !c.matches).count();
    let cells = diff
        .iter()
        .map(|c| {
            let status = if c.matches {
                CellStatus::Match
            } else {
                let printed: Vec<String> = c
                    .printed
                    .split(';')
                    .map(|alt| parse(alt.trim()).expect("printed cells parse").to_string_styled(style))
                    .collect();
                CellStatus::Mismatch {
                    printed: printed.join(" / "),
                    computed: c.computed.statement().to_string_styled(style),
                }
            };
            DiffEntry {
                row: unary_glyph(c.row, style).to_string(),
                column: restyle(c.column, style),
                polynomial: c.computed.poly.to_string(),
                status,
            }
        })
        .collect();
    let lower = unary_glyph(UnaryOp::Lower, style);
    let clauses = de_morgan_checks()
        .into_iter()
        .map(|c| Clause {
            source: match c.source {
                ClauseSource::Lemma => "lemma",
                ClauseSource::Definition => "definition",
            }
            .into(),
            clause: c.clause.to_string(),
            argument: format!("{lower}({})", c.argument.to_string_styled(style)),
            claimed: c.claimed.iter().map(|f| f.to_string_styled(style)).collect(),
            computed: c.computed.to_string(),
            agrees: c.agrees,
        })
        .collect();
    debug_assert_eq!(PRINTED_COLUMNS.len() * 4, diff.len());
    emit(cli, "singular-tables", SingularTables { cells, mismatches, clauses }, 0)
}

fn demi(cli: &Cli) -> Output {
    let r = pbnf::singular::demi_negation_search();
    let body = Demi {
        singular: r.singular.iter().map(|&u| unary_glyph(u, cli.style).to_string()).collect(),
        pair_maps: r.pair_maps.iter().map(|m| m.iter().map(Pair::to_string).collect()).collect(),
        z4: r.z4.iter().map(|z| z.residue()).collect(),
    };
    emit(cli, "singular-demi", body, 0)
}

fn matrix_op(cli: &Cli, op: OperatorId) -> Outcome {
    let m = op_matrix(op).map_err(|e| Failure::Usage(e.to_string()))?;
    let bits = |x: [[bool; 2]; 2]| x.map(|r| r.map(u8::from));
    let t = m.transpose();
    let body = MatrixOp {
        operator: op.name().to_string(),
        matrix: bits(m.0),
        transpose: bits(t.0),
        transpose_operator: t.operator().name().to_string(),
    };
    Ok(emit(cli, "matrix-op", body, 0))
}

/// Splits `a,b,c,d` or `(a,b,c,d)` into four polynomials.
fn poly_matrix(input: &str) -> Result<PolyMatrix2, Failure> {
    let trimmed = input.trim();
    let inner = match trimmed.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        Some(inner) if balanced(inner) => inner,
        _ => trimmed,
    };
    let parts: Vec<&str> = inner.split(',').collect();
    let [a, b, c, d] = parts.as_slice() else {
        return Err(Failure::Usage(format!("a matrix needs four comma-separated entries, got {input:?}")));
    };
    Ok(PolyMatrix2::new(polynomial(a.trim())?, polynomial(b.trim())?, polynomial(c.trim())?, polynomial(d.trim())?))
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

fn matrix_mul(cli: &Cli, left: &str, right: &str) -> Outcome {
    let (m, n) = (poly_matrix(left)?, poly_matrix(right)?);
    let strings = |x: &PolyMatrix2| x.entries().map(Poly::to_string);
    let body = MatrixMul { left: strings(&m), right: strings(&n), product: strings(&m.mat_mul(&n)) };
    Ok(emit(cli, "matrix-mul", body, 0))
}
