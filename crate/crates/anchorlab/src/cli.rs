//! Command-line front end: batch graph analysis, anchor listings, deck
//! utilities, reconstruction, and the enumeration tables, over graph6
//! input in text, JSON, or CSV form.

use std::fmt::Display;
use std::io::{Read as _, Write};
use std::ops::RangeInclusive;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::anchor;
use crate::canon;
use crate::deck::{self, Deck};
use crate::enumeration;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6;
use crate::theorems::{self, Witness};

/// Fixed default for seeded utilities so plain runs are reproducible.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Parser, Debug)]
#[command(
    name = "anchorlab",
    version,
    about = "Anchor subgraphs, vertex-deleted decks, and reconstruction reports for small graphs"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Graph input: a graph6 literal, a path to a file of graph6 lines, or
/// `-` for standard input. Commands over single graphs treat each line
/// as one graph.
const INPUT_HELP: &str = "graph6 text, a file of graph6 lines, or - for standard input";

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Anchor report per graph: anchor number, orbits, maximal extension.
    Analyze {
        #[arg(help = INPUT_HELP)]
        input: String,
        /// Analyze the complement of each input graph instead.
        #[arg(long)]
        complement: bool,
    },
    /// List the anchors of each order up to a bound.
    Anchors {
        #[arg(help = INPUT_HELP)]
        input: String,
        /// Work on the complement of each input graph instead.
        #[arg(long)]
        complement: bool,
        /// Largest anchor order to list; defaults to n-1.
        #[arg(long, value_name = "K")]
        max_order: Option<usize>,
    },
    /// Print a graph's deck, or answer a pattern count from a deck.
    Deck {
        /// one graph6 line: the graph whose deck to take; several lines:
        /// the deck itself; a file path or - works too
        input: String,
        /// Count induced copies of this graph6 pattern via the deck.
        #[arg(long, value_name = "GRAPH6")]
        count: Option<String>,
    },
    /// Reconstruction reason per graph, with a checkable witness.
    Classify {
        #[arg(help = INPUT_HELP)]
        input: String,
        /// Classify the complement of each input graph instead.
        #[arg(long)]
        complement: bool,
    },
    /// Anchor-number histogram and anchor-free splits per order.
    Tables {
        /// Single order or inclusive range, e.g. 6 or 5..8.
        #[arg(long, value_parser = parse_orders, value_name = "N|A..B")]
        n: OrderRange,
        /// Allow orders of nine and above (slow).
        #[arg(long)]
        long: bool,
        /// Also measure how often a random graph has an asymmetric anchor
        /// on all but two vertices, over this many samples per order.
        #[arg(long, value_name = "SAMPLES")]
        sample_asym_n2: Option<u64>,
        /// Seed for the sampled measurement.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Deck-collision census over all classes of an order.
    Census {
        /// Single order or inclusive range, e.g. 6 or 3..7.
        #[arg(long, value_parser = parse_orders, value_name = "N|A..B")]
        n: OrderRange,
        /// Allow orders of nine and above (slow).
        #[arg(long)]
        long: bool,
    },
    /// All graphs consistent with a deck, by exhaustive search.
    Reconstruct {
        /// deck as newline-separated graph6 lines: a file, literal text,
        /// or - for standard input
        input: String,
    },
}

pub type OrderRange = RangeInclusive<usize>;

fn parse_orders(s: &str) -> std::result::Result<OrderRange, String> {
    let parse_end = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("expected an order or a..b range, got {s:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let a = parse_end(a)?;
            let b = parse_end(b.strip_prefix('=').unwrap_or(b))?;
            if a > b {
                return Err(format!("empty order range {s:?}"));
            }
            Ok(a..=b)
        }
        None => {
            let k = parse_end(s)?;
            Ok(k..=k)
        }
    }
}

/// Dispatch a parsed command line, writing the report to `out`. Errors
/// returned here are domain errors; argv problems never reach this point.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let format = cli.format;
    match cli.command {
        Command::Analyze { input, complement } => {
            let records: Vec<AnalyzeRecord> = input_graphs(&input, complement)?
                .iter()
                .map(analyze_record)
                .collect::<Result<_>>()?;
            emit(out, format, &records, render_analyze, csv_analyze)
        }
        Command::Anchors { input, complement, max_order } => {
            let records: Vec<AnchorsRecord> = input_graphs(&input, complement)?
                .iter()
                .map(|g| anchors_record(g, max_order))
                .collect();
            emit(out, format, &records, render_anchors, csv_anchors)
        }
        Command::Classify { input, complement } => {
            let records: Vec<ClassifyRecord> = input_graphs(&input, complement)?
                .iter()
                .map(classify_record)
                .collect::<Result<_>>()?;
            emit(out, format, &records, render_classify, csv_classify)
        }
        Command::Deck { input, count } => {
            let record = deck_record(&input, count.as_deref())?;
            emit(out, format, &record, render_deck, csv_deck)
        }
        Command::Reconstruct { input } => {
            let record = reconstruct_record(&input)?;
            emit(out, format, &record, render_reconstruct, csv_reconstruct)
        }
        Command::Tables { n, long, sample_asym_n2, seed } => {
            check_long(&n, long)?;
            let mut records = Vec::new();
            for k in n {
                records.push(tables_record(k, sample_asym_n2, seed)?);
            }
            emit(out, format, &records, render_tables, csv_tables)
        }
        Command::Census { n, long } => {
            check_long(&n, long)?;
            let mut records = Vec::new();
            for k in n {
                records.push(census_record(k)?);
            }
            emit(out, format, &records, render_census, csv_census)
        }
    }
}

fn check_long(orders: &OrderRange, long: bool) -> Result<()> {
    if *orders.end() >= 9 && !long {
        return Err(Error::InvalidArgument(
            "orders nine and above take a while: pass --long".into(),
        ));
    }
    Ok(())
}

fn read_input(input: &str) -> Result<String> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else if Path::new(input).is_file() {
        Ok(std::fs::read_to_string(input)?)
    } else {
        Ok(input.to_string())
    }
}

fn input_lines(input: &str) -> Result<Vec<String>> {
    let text = read_input(input)?;
    let lines: Vec<String> =
        text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect();
    if lines.is_empty() {
        return Err(Error::InvalidArgument("empty graph6 input".into()));
    }
    Ok(lines)
}

fn input_graphs(input: &str, complement: bool) -> Result<Vec<Graph>> {
    let mut graphs: Vec<Graph> =
        input_lines(input)?.iter().map(|l| graph6::decode(l)).collect::<Result<_>>()?;
    if complement {
        graphs = graphs.iter().map(Graph::complement).collect();
    }
    Ok(graphs)
}

/// Render records in the selected format. Text and JSON expose the same
/// field values; CSV flattens nested lists into delimited columns.
fn emit<T: Serialize>(
    out: &mut dyn Write,
    format: Format,
    records: &T,
    text: impl Fn(&mut dyn Write, &T) -> Result<()>,
    csv: impl Fn(&mut csv::Writer<&mut dyn Write>, &T) -> Result<()>,
) -> Result<()> {
    match format {
        Format::Text => text(out, records),
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records)
                .map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out)?;
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            csv(&mut w, records)?;
            w.flush()?;
            Ok(())
        }
    }
}

fn csv_row<I>(w: &mut csv::Writer<&mut dyn Write>, row: I) -> Result<()>
where
    I: IntoIterator,
    I::Item: AsRef<[u8]>,
{
    w.write_record(row).map_err(|e| Error::Io(e.to_string()))
}

fn join<T: Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

// ---- analyze ----

#[derive(Serialize)]
struct AnalyzeRecord {
    graph6: String,
    n: usize,
    edges: usize,
    connected: bool,
    automorphisms: u64,
    orbits: Vec<VertexSet>,
    anchor_number: usize,
    anchor_free: bool,
    extension: Option<ExtensionRecord>,
}

/// Fixed point of the anchor extension, grown from a smallest anchor.
#[derive(Serialize)]
struct ExtensionRecord {
    seed: VertexSet,
    anchor: VertexSet,
    residue: VertexSet,
    /// Shadows of the residue vertices, in the anchor's local labels.
    shadows: Vec<VertexSet>,
    is_maximal: bool,
}

/// A smallest anchor, ties broken by canonical code then vertex set.
fn smallest_anchor(g: &Graph, anchor_number: usize) -> Option<VertexSet> {
    if anchor_number >= g.n() {
        return None;
    }
    anchor::anchors_of_order(g, anchor_number)
        .into_iter()
        .min_by_key(|&s| (canon::canon_code(&g.induced(s)), s))
}

fn analyze_record(g: &Graph) -> Result<AnalyzeRecord> {
    let anchor_number = anchor::anchor_number(g)?;
    let extension = match smallest_anchor(g, anchor_number) {
        Some(seed) => {
            let report = anchor::extend_to_maximal(g, seed)?;
            let mut shadows = report.shadows.entries.clone();
            shadows.sort();
            Some(ExtensionRecord {
                seed,
                anchor: report.anchor,
                residue: report.residue,
                shadows,
                is_maximal: report.is_maximal,
            })
        }
        None => None,
    };
    Ok(AnalyzeRecord {
        graph6: graph6::encode(g),
        n: g.n(),
        edges: g.edge_count(),
        connected: g.is_connected(),
        automorphisms: canon::automorphism_group(g).order,
        orbits: canon::orbits(g),
        anchor_number,
        anchor_free: anchor_number == g.n(),
        extension,
    })
}

fn render_analyze(out: &mut dyn Write, records: &Vec<AnalyzeRecord>) -> Result<()> {
    for r in records {
        writeln!(
            out,
            "graph {}: n={}, {} edges, {}, {} automorphisms",
            r.graph6,
            r.n,
            r.edges,
            if r.connected { "connected" } else { "disconnected" },
            r.automorphisms
        )?;
        writeln!(out, "  orbits: {}", join(&r.orbits, " "))?;
        if r.anchor_free {
            writeln!(out, "  anchor number {}, anchor-free", r.anchor_number)?;
        } else {
            writeln!(out, "  anchor number {}", r.anchor_number)?;
        }
        if let Some(e) = &r.extension {
            writeln!(
                out,
                "  anchor {} extends to {}: residue {}, shadows [{}], {}",
                e.seed,
                e.anchor,
                e.residue,
                join(&e.shadows, " "),
                if e.is_maximal { "maximal" } else { "not maximal" }
            )?;
        }
    }
    Ok(())
}

fn csv_analyze(w: &mut csv::Writer<&mut dyn Write>, records: &Vec<AnalyzeRecord>) -> Result<()> {
    csv_row(
        w,
        [
            "graph6",
            "n",
            "edges",
            "connected",
            "automorphisms",
            "orbits",
            "anchor_number",
            "anchor_free",
            "extension_seed",
            "extension_anchor",
            "extension_residue",
            "extension_shadows",
            "extension_maximal",
        ],
    )?;
    for r in records {
        let ext = r.extension.as_ref();
        csv_row(
            w,
            [
                r.graph6.clone(),
                r.n.to_string(),
                r.edges.to_string(),
                r.connected.to_string(),
                r.automorphisms.to_string(),
                join(&r.orbits, " "),
                r.anchor_number.to_string(),
                r.anchor_free.to_string(),
                ext.map_or(String::new(), |e| e.seed.to_string()),
                ext.map_or(String::new(), |e| e.anchor.to_string()),
                ext.map_or(String::new(), |e| e.residue.to_string()),
                ext.map_or(String::new(), |e| join(&e.shadows, " ")),
                ext.map_or(String::new(), |e| e.is_maximal.to_string()),
            ],
        )?;
    }
    Ok(())
}

// ---- anchors ----

#[derive(Serialize)]
struct AnchorsRecord {
    graph6: String,
    n: usize,
    max_order: usize,
    /// Orders that have anchors at all, ascending.
    orders: Vec<OrderAnchors>,
}

#[derive(Serialize)]
struct OrderAnchors {
    order: usize,
    anchors: Vec<VertexSet>,
}

fn anchors_record(g: &Graph, max_order: Option<usize>) -> AnchorsRecord {
    let cap = g.n().saturating_sub(1);
    let max_order = max_order.unwrap_or(cap).min(cap);
    let orders = (1..=max_order)
        .filter_map(|order| {
            let anchors = anchor::anchors_of_order(g, order);
            (!anchors.is_empty()).then_some(OrderAnchors { order, anchors })
        })
        .collect();
    AnchorsRecord { graph6: graph6::encode(g), n: g.n(), max_order, orders }
}

fn render_anchors(out: &mut dyn Write, records: &Vec<AnchorsRecord>) -> Result<()> {
    for r in records {
        if r.orders.is_empty() {
            writeln!(out, "graph {}: no anchors up to order {}", r.graph6, r.max_order)?;
            continue;
        }
        writeln!(out, "graph {}:", r.graph6)?;
        for o in &r.orders {
            writeln!(out, "  order {}: {}", o.order, join(&o.anchors, " "))?;
        }
    }
    Ok(())
}

fn csv_anchors(w: &mut csv::Writer<&mut dyn Write>, records: &Vec<AnchorsRecord>) -> Result<()> {
    csv_row(w, ["graph6", "order", "count", "anchors"])?;
    for r in records {
        for o in &r.orders {
            csv_row(
                w,
                [
                    r.graph6.clone(),
                    o.order.to_string(),
                    o.anchors.len().to_string(),
                    join(&o.anchors, " "),
                ],
            )?;
        }
    }
    Ok(())
}

// ---- classify ----

#[derive(Serialize)]
struct ClassifyRecord {
    graph6: String,
    n: usize,
    reason: String,
    on_complement: bool,
    /// The anchor the witness leans on, in input labels.
    anchor: Option<VertexSet>,
    witness: Option<Witness>,
}

fn classify_record(g: &Graph) -> Result<ClassifyRecord> {
    let rc = theorems::classify(g)?;
    Ok(ClassifyRecord {
        graph6: graph6::encode(g),
        n: g.n(),
        reason: rc.reason.to_string(),
        on_complement: rc.on_complement,
        anchor: rc.witness.as_ref().map(Witness::anchor_set),
        witness: rc.witness,
    })
}

fn render_classify(out: &mut dyn Write, records: &Vec<ClassifyRecord>) -> Result<()> {
    for r in records {
        let side = if r.on_complement { " (on complement)" } else { "" };
        match r.anchor {
            Some(a) => writeln!(out, "graph {}: {}{}, anchor {}", r.graph6, r.reason, side, a)?,
            None => writeln!(out, "graph {}: {}{}", r.graph6, r.reason, side)?,
        }
    }
    Ok(())
}

fn csv_classify(w: &mut csv::Writer<&mut dyn Write>, records: &Vec<ClassifyRecord>) -> Result<()> {
    csv_row(w, ["graph6", "n", "reason", "on_complement", "anchor"])?;
    for r in records {
        csv_row(
            w,
            [
                r.graph6.clone(),
                r.n.to_string(),
                r.reason.clone(),
                r.on_complement.to_string(),
                r.anchor.map_or(String::new(), |a| a.to_string()),
            ],
        )?;
    }
    Ok(())
}

// ---- deck ----

#[derive(Serialize)]
struct DeckRecord {
    n: usize,
    card_order: usize,
    card_count: usize,
    cards: Vec<CardRecord>,
    count: Option<CountRecord>,
}

#[derive(Serialize)]
struct CardRecord {
    graph6: String,
    multiplicity: usize,
}

#[derive(Serialize)]
struct CountRecord {
    pattern: String,
    count: u64,
}

fn input_deck(input: &str) -> Result<Deck> {
    let lines = input_lines(input)?;
    if lines.len() == 1 {
        Deck::of(&graph6::decode(&lines[0])?)
    } else {
        Deck::from_graph6_lines(&lines.join("\n"))
    }
}

fn deck_record(input: &str, count: Option<&str>) -> Result<DeckRecord> {
    let deck = input_deck(input)?;
    let count = match count {
        Some(pattern) => {
            let h = graph6::decode(pattern)?;
            Some(CountRecord {
                pattern: pattern.to_string(),
                count: deck::count_from_deck(&deck, &h)?,
            })
        }
        None => None,
    };
    let cards = deck
        .cards()
        .map(|(card, multiplicity)| CardRecord { graph6: graph6::encode(card), multiplicity })
        .collect();
    Ok(DeckRecord {
        n: deck.n(),
        card_order: deck.card_order(),
        card_count: deck.card_count(),
        cards,
        count,
    })
}

fn render_deck(out: &mut dyn Write, r: &DeckRecord) -> Result<()> {
    writeln!(
        out,
        "deck of a graph on {} vertices: {} cards of order {}",
        r.n, r.card_count, r.card_order
    )?;
    for c in &r.cards {
        writeln!(out, "  {} x{}", c.graph6, c.multiplicity)?;
    }
    if let Some(q) = &r.count {
        writeln!(out, "count of pattern {}: {}", q.pattern, q.count)?;
    }
    Ok(())
}

fn csv_deck(w: &mut csv::Writer<&mut dyn Write>, r: &DeckRecord) -> Result<()> {
    if let Some(q) = &r.count {
        csv_row(w, ["pattern", "count"])?;
        csv_row(w, [q.pattern.clone(), q.count.to_string()])?;
        return Ok(());
    }
    csv_row(w, ["graph6", "multiplicity"])?;
    for c in &r.cards {
        csv_row(w, [c.graph6.clone(), c.multiplicity.to_string()])?;
    }
    Ok(())
}

// ---- reconstruct ----

#[derive(Serialize)]
struct ReconstructRecord {
    n: usize,
    card_order: usize,
    /// Canonical graph6 of every graph with this deck, ascending.
    candidates: Vec<String>,
}

fn reconstruct_record(input: &str) -> Result<ReconstructRecord> {
    let deck = Deck::from_graph6_lines(&input_lines(input)?.join("\n"))?;
    let candidates =
        deck::brute_force_reconstruct(&deck)?.iter().map(graph6::encode).collect();
    Ok(ReconstructRecord { n: deck.n(), card_order: deck.card_order(), candidates })
}

fn render_reconstruct(out: &mut dyn Write, r: &ReconstructRecord) -> Result<()> {
    for c in &r.candidates {
        writeln!(out, "{c}")?;
    }
    Ok(())
}

fn csv_reconstruct(w: &mut csv::Writer<&mut dyn Write>, r: &ReconstructRecord) -> Result<()> {
    csv_row(w, ["graph6"])?;
    for c in &r.candidates {
        csv_row(w, [c.clone()])?;
    }
    Ok(())
}

// ---- tables ----

#[derive(Serialize)]
struct TablesRecord {
    n: usize,
    classes: u64,
    /// Classes per anchor number, ascending by anchor number.
    anchor_numbers: Vec<HistEntry>,
    anchor_free: u64,
    vertex_transitive: u64,
    informal_anchor_free: Vec<String>,
    almost_anchor_free: u64,
    isolated_or_dominating: u64,
    isolated_union_anchor_free: u64,
    informal_almost: Vec<String>,
    formal: u64,
    informal: u64,
    total: u64,
    asym_n2: Option<AsymRecord>,
}

#[derive(Serialize)]
struct HistEntry {
    anchor_number: usize,
    classes: u64,
}

#[derive(Serialize)]
struct AsymRecord {
    hits: u64,
    samples: u64,
    seed: u64,
}

fn tables_record(n: usize, sample_asym_n2: Option<u64>, seed: u64) -> Result<TablesRecord> {
    let hist = enumeration::anchor_number_histogram(n)?;
    let stats = enumeration::anchorfree_stats(n)?;
    let asym_n2 = match sample_asym_n2 {
        Some(samples) => {
            let (hits, samples) = enumeration::asymmetric_n2_fraction_sampled(n, samples, seed)?;
            Some(AsymRecord { hits, samples, seed })
        }
        None => None,
    };
    Ok(TablesRecord {
        n,
        classes: hist.values().sum(),
        anchor_numbers: hist
            .into_iter()
            .map(|(anchor_number, classes)| HistEntry { anchor_number, classes })
            .collect(),
        anchor_free: stats.anchor_free,
        vertex_transitive: stats.vertex_transitive,
        almost_anchor_free: stats.almost_anchor_free,
        isolated_or_dominating: stats.with_isolated_or_dominating,
        isolated_union_anchor_free: stats.isolated_union_anchor_free,
        formal: stats.formal(),
        informal: stats.informal(),
        total: stats.total(),
        informal_anchor_free: stats.informal_anchor_free,
        informal_almost: stats.informal_almost,
        asym_n2,
    })
}

fn render_tables(out: &mut dyn Write, records: &Vec<TablesRecord>) -> Result<()> {
    for r in records {
        let hist = join(
            r.anchor_numbers.iter().map(|e| format!("{}:{}", e.anchor_number, e.classes)),
            ", ",
        );
        writeln!(out, "n={}: classes {}, anchors {{{hist}}}", r.n, r.classes)?;
        writeln!(
            out,
            "  anchor number n: {} (vertex-transitive {})",
            r.anchor_free, r.vertex_transitive
        )?;
        writeln!(
            out,
            "  anchor number n-1: {} (isolated or dominating vertex {}, anchor-free rest {})",
            r.almost_anchor_free, r.isolated_or_dominating, r.isolated_union_anchor_free
        )?;
        writeln!(out, "  total {} = formal {} + informal {}", r.total, r.formal, r.informal)?;
        if !r.informal_anchor_free.is_empty() {
            writeln!(out, "  informal anchor-free: {}", r.informal_anchor_free.join(" "))?;
        }
        if !r.informal_almost.is_empty() {
            writeln!(out, "  informal n-1: {}", r.informal_almost.join(" "))?;
        }
        if let Some(a) = &r.asym_n2 {
            writeln!(
                out,
                "  asymmetric (n-2)-anchor rate: {}/{} (seed {})",
                a.hits, a.samples, a.seed
            )?;
        }
    }
    Ok(())
}

// CSV keeps the long histogram form; splits and rates live in text and JSON.
fn csv_tables(w: &mut csv::Writer<&mut dyn Write>, records: &Vec<TablesRecord>) -> Result<()> {
    csv_row(w, ["n", "k", "count"])?;
    for r in records {
        for e in &r.anchor_numbers {
            csv_row(w, [r.n.to_string(), e.anchor_number.to_string(), e.classes.to_string()])?;
        }
    }
    Ok(())
}

// ---- census ----

#[derive(Serialize)]
struct CensusRecord {
    n: usize,
    classes: u64,
    decks: u64,
    collisions: u64,
    colliding_groups: Vec<Vec<String>>,
}

fn census_record(n: usize) -> Result<CensusRecord> {
    let report = enumeration::reconstruction_census(n)?;
    Ok(CensusRecord {
        n: report.n,
        classes: report.classes,
        decks: report.decks,
        collisions: report.collisions(),
        colliding_groups: report.colliding_groups,
    })
}

fn render_census(out: &mut dyn Write, records: &Vec<CensusRecord>) -> Result<()> {
    for r in records {
        writeln!(
            out,
            "n={}: classes {}, distinct decks {}, collisions {}",
            r.n, r.classes, r.decks, r.collisions
        )?;
        for group in &r.colliding_groups {
            writeln!(out, "  shared deck: {}", group.join(" "))?;
        }
    }
    Ok(())
}

fn csv_census(w: &mut csv::Writer<&mut dyn Write>, records: &Vec<CensusRecord>) -> Result<()> {
    csv_row(w, ["n", "classes", "decks", "collisions", "colliding_groups"])?;
    for r in records {
        csv_row(
            w,
            [
                r.n.to_string(),
                r.classes.to_string(),
                r.decks.to_string(),
                r.collisions.to_string(),
                join(r.colliding_groups.iter().map(|g| g.join(" ")), "; "),
            ],
        )?;
    }
    Ok(())
}
