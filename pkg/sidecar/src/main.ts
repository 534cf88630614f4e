#!/usr/bin/env node
// Batch entity tagger. Reads {question_id, answers: [...]} JSON lines on
// stdin and writes {question_id, tag} JSON lines on stdout, one per
// well-formed input line, in input order. Malformed lines produce an error
// object on stderr and processing continues.

import readline from "node:readline";
import { tagQuestion } from "./tagger.js";

function parseArgs(argv: string[]): { model: string } {
  let model = "compromise";
  for (let i = 0; i < argv.length; i++) {
    if (argv[i] === "--model") {
      model = argv[++i] ?? model;
    } else if (argv[i] === "--help" || argv[i] === "-h") {
      console.error("usage: ner-sidecar [--model compromise] < requests.jsonl > tags.jsonl");
      process.exit(0);
    }
  }
  return { model };
}

const { model } = parseArgs(process.argv.slice(2));
if (model !== "compromise") {
  console.error(`note: only the built-in "compromise" model ships; ignoring --model ${model}`);
}

const rl = readline.createInterface({ input: process.stdin, terminal: false });
let lineNo = 0;

rl.on("line", (line: string) => {
  lineNo += 1;
  if (!line.trim()) return;
  let request: { question_id?: unknown; answers?: unknown };
  try {
    request = JSON.parse(line);
  } catch (err) {
    console.error(JSON.stringify({ error: "malformed line", line: lineNo }));
    return;
  }
  const questionId = request.question_id;
  const answers = request.answers;
  if (
    typeof questionId !== "string" ||
    !Array.isArray(answers) ||
    answers.length === 0 ||
    !answers.every((a) => typeof a === "string")
  ) {
    console.error(
      JSON.stringify({ error: "expected {question_id, answers:[text]}", line: lineNo }),
    );
    return;
  }
  const tag = tagQuestion(answers as string[]);
  process.stdout.write(JSON.stringify({ question_id: questionId, tag }) + "\n");
});
