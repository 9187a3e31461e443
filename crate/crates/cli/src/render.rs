use serde::Serialize;

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv of utf-8 fields")
}

pub fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Right-aligned grid with row labels.
pub fn grid(rows: &[String], cols: &[String], cells: &[Vec<String>]) -> String {
    let head = rows.iter().map(|r| r.chars().count()).max().unwrap_or(0) + 2;
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let widest = cells.iter().filter_map(|row| row.get(j)).map(|v| v.chars().count()).max().unwrap_or(0);
            widest.max(c.chars().count()) + 2
        })
        .collect();
    let mut out = format!("{:head$}", "");
    for (c, w) in cols.iter().zip(&widths) {
        out.push_str(&format!("{c:>w$}"));
    }
    out.push('\n');
    for (r, row) in rows.iter().zip(cells) {
        out.push_str(&format!("{r:head$}"));
        for (v, w) in row.iter().zip(&widths) {
            out.push_str(&format!("{v:>w$}"));
        }
        out.push('\n');
    }
    out
}
