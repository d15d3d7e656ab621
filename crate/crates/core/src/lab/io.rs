//! CSV interchange for trial records and summaries (UTF-8, LF endings).

use std::io::{Read, Write};

use crate::error::Result;
use crate::lab::runner::TrialRecord;
use crate::lab::stats::SummaryRow;

pub const TRIALS_HEADER: &str = "problem,n,k,variant,policy,pop_size,seed,evaluations,hit";
pub const SUMMARY_HEADER: &str = "problem,n,variant,mean_evals,std_evals,success_rate,runs";

pub(crate) fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn write_trials_csv<W: Write>(out: W, records: &[TrialRecord]) -> Result<()> {
    let mut w = csv_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_summary_csv<W: Write>(out: W, rows: &[SummaryRow]) -> Result<()> {
    let mut w = csv_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_summary_csv<R: Read>(input: R) -> Result<Vec<SummaryRow>> {
    let mut rdr = csv::Reader::from_reader(input);
    Ok(rdr.deserialize().collect::<Result<_, csv::Error>>()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::plan::PolicyKind;

    #[test]
    fn trial_csv_layout() {
        let r = TrialRecord {
            problem: "ojzj".into(),
            n: 10,
            k: Some(2),
            variant: "R-NSGA-II N=1".into(),
            policy: PolicyKind::Reference,
            pop_size: 1,
            seed: 123,
            evaluations: 456,
            hit: true,
            trial: 7,
        };
        let mut plain = r.clone();
        plain.k = None;
        let mut buf = Vec::new();
        write_trials_csv(&mut buf, &[r, plain]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            format!(
                "{TRIALS_HEADER}\nojzj,10,2,R-NSGA-II N=1,reference,1,123,456,true\n\
                 ojzj,10,,R-NSGA-II N=1,reference,1,123,456,true\n"
            )
        );
    }

    #[test]
    fn summary_csv_round_trip() {
        let rows = vec![SummaryRow {
            problem: "omm".into(),
            n: 20,
            variant: "NSGA-II".into(),
            mean_evals: 1234.5,
            std_evals: 17.25,
            success_rate: 1.0,
            runs: 10,
        }];
        let mut buf = Vec::new();
        write_summary_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with(&format!("{SUMMARY_HEADER}\n")));
        assert_eq!(read_summary_csv(buf.as_slice()).unwrap(), rows);
    }

    #[test]
    fn malformed_summary_is_an_error() {
        let bad = "problem,n,variant\nomm,ten,x\n";
        assert!(read_summary_csv(bad.as_bytes()).is_err());
    }
}
