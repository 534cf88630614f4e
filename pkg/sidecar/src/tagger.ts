import nlp from "compromise";

/** The 19 tag names the evaluator understands (18 entity classes + N/A). */
export const TAG_NAMES = [
  "DATE", "CARDINAL", "QUANTITY", "ORDINAL", "MONEY", "PERCENT", "TIME",
  "PERSON", "GPE", "ORG", "NORP", "LOC", "WORK_OF_ART", "FAC", "PRODUCT",
  "EVENT", "LAW", "LANGUAGE", "N/A",
] as const;

export type Tag = (typeof TAG_NAMES)[number];

interface Span {
  text: string;
  tag: Tag;
}

// When several spans compete, more specific classes win over generic ones;
// bare numbers come last so "42%" is PERCENT and not CARDINAL.
const TAG_PRIORITY: Tag[] = [
  "PERSON", "ORG", "GPE", "LOC", "NORP", "LANGUAGE",
  "PERCENT", "MONEY", "TIME", "DATE", "ORDINAL", "CARDINAL",
];

const YEAR_RE = /^[12]\d{3}$/;

function norm(text: string): string {
  return text
    .toLowerCase()
    .replace(/[.,!?'"()]/g, "")
    .replace(/\s+/g, " ")
    .trim();
}

function collect(doc: ReturnType<typeof nlp>): Span[] {
  const spans: Span[] = [];
  const push = (texts: string[], tag: Tag) => {
    for (const text of texts) {
      if (text.trim()) spans.push({ text, tag });
    }
  };

  push(doc.people().out("array"), "PERSON");
  push(doc.organizations().out("array"), "ORG");
  // Places split into geopolitical units vs other locations.
  for (const place of doc.places().json() as Array<{ text: string; terms: Array<{ tags?: string[] }> }>) {
    const tags = place.terms.flatMap((t) => t.tags ?? []);
    const geopolitical = tags.some((t) =>
      ["City", "Country", "Region", "Town"].includes(t),
    );
    spans.push({ text: place.text, tag: geopolitical ? "GPE" : "LOC" });
  }
  push(doc.match("#Demonym").out("array"), "NORP");
  push(doc.match("#Language").out("array"), "LANGUAGE");
  push(doc.match("#Percent").out("array"), "PERCENT");
  // A money-tagged term extends over its whole value chunk ("$38 million").
  for (const chunk of doc.match("#Value+").json() as Array<{ text: string; terms: Array<{ tags?: string[] }> }>) {
    const tags = chunk.terms.flatMap((t) => t.tags ?? []);
    if (tags.includes("Money")) spans.push({ text: chunk.text, tag: "MONEY" });
  }
  push(doc.match("#Value+ #Duration").out("array"), "TIME");
  push(doc.match("#Duration").out("array"), "TIME");
  push(doc.match("#Time+").out("array"), "TIME");
  // Duration units double as #Date in the lexicon; keep only date chunks
  // that carry a term which is a date but not a duration.
  for (const chunk of doc.match("#Date+").json() as Array<{ text: string; terms: Array<{ tags?: string[] }> }>) {
    const hasPureDate = chunk.terms.some(
      (t) => (t.tags ?? []).includes("Date") && !(t.tags ?? []).includes("Duration"),
    );
    if (hasPureDate) spans.push({ text: chunk.text, tag: "DATE" });
  }
  push(doc.match("#Ordinal").out("array"), "ORDINAL");
  push(doc.match("#Value+").out("array"), "CARDINAL");
  return spans;
}

/** Tag a single answer string. Spans that cover the whole answer win over
 *  partial spans; among equals the more specific class is chosen. */
export function tagAnswer(answer: string): Tag {
  const trimmed = answer.trim();
  if (!trimmed) return "N/A";
  if (YEAR_RE.test(trimmed)) return "DATE"; // bare years read as plain values
  const spans = collect(nlp(trimmed));
  if (spans.length === 0) return "N/A";
  const whole = norm(trimmed);
  const rank = (tag: Tag) => TAG_PRIORITY.indexOf(tag);
  const covering = spans.filter((s) => norm(s.text) === whole);
  if (covering.length > 0) {
    covering.sort((a, b) => rank(a.tag) - rank(b.tag));
    return covering[0].tag;
  }
  spans.sort((a, b) => b.text.length - a.text.length || rank(a.tag) - rank(b.tag));
  return spans[0].tag;
}

/** Majority vote over per-answer tags; ties break to the first answer's tag. */
export function tagQuestion(answers: string[]): Tag {
  const tags = answers.map(tagAnswer);
  if (tags.length === 0) return "N/A";
  const counts = new Map<Tag, number>();
  for (const tag of tags) counts.set(tag, (counts.get(tag) ?? 0) + 1);
  const best = Math.max(...counts.values());
  for (const tag of tags) {
    if (counts.get(tag) === best) return tag;
  }
  return "N/A";
}
