#include "longhop/assets.hpp"

namespace longhop::assets {

namespace {

const char* kDecompose =
    R"(Solve the question step by step by asking sub-questions. Given the question and the facts gathered so far, reply with exactly one line: the next sub-question as "Subquestion: ..." or, once the facts are sufficient, the answer as "Final answer: ...".

Question: What is the birth day of Rain Wilson' father?
Subquestion: Who is the father of Rain Wilson?
Fact: Robert Wilson is the father of Rain Wilson.
Subquestion: What is the birth day of Robert Wilson?
Fact: Robert Wilson was born on June 24, 1941.
Final answer: June 24, 1941

Question: Who is the paternal grandfather of John Smith?
Subquestion: Who is the father of John Smith?
Fact: David Smith is the father of John Smith.
Subquestion: Who is the father of David Smith?
Fact: George Smith is the father of David Smith.
Final answer: George Smith

Question: What is the capital city of the country of citizenship of Ivanka Trump's spouse?
Subquestion: Who is the spouse of Ivanka Trump?
Fact: Jared Kushner is the spouse of Ivanka Trump.
Subquestion: What is the country of citizenship of Jared Kushner?
Fact: Jared Kushner is a citizen of the United States of America.
Subquestion: What is the capital city of the United States of America?
Fact: Washington, D.C. is the capital city of the United States of America.
Final answer: Washington, D.C.

Question: Do both Django Unchained and Rango films have the directors from the same country?
Subquestion: Who is the director of Django Unchained?
Fact: Quentin Tarantino is the director of Django Unchained.
Subquestion: Who is the director of Rango?
Fact: Gore Verbinski is the director of Rango.
Subquestion: What is the country of citizenship of Quentin Tarantino?
Fact: Quentin Tarantino is a citizen of the United States of America.
Subquestion: What is the country of citizenship of Gore Verbinski?
Fact: Gore Verbinski is a citizen of the United States of America.
Final answer: Yes

Question: Which film has the director who died first, Love in the AfterNoon or Gigi?
Subquestion: Who is the director of Love in the AfterNoon?
Fact: Billy Wilder is the director of Love in the AfterNoon.
Subquestion: Who is the director of Gigi?
Fact: Vincente Minnelli is the director of Gigi.
Subquestion: When did Billy Wilder die?
Fact: Billy Wilder died on March 27, 2002.
Subquestion: When did Vincente Minnelli die?
Fact: Vincente Minnelli died on July 25, 1986.
Final answer: Gigi

Question: {Thought}
)";

const char* kExtractFact =
    "Reference: {Context_Q}. Based on the reference, present the fact to answer "
    "the following question. \n Be concise, better one sentence. \n Question: "
    "{Question}. Fact:";

const char* kKcdStep =
    R"(Solve the question step by step by stating declarative reasoning steps. Given the question and the steps so far, reply with exactly one line: the next step as "Step: ..." or, once the steps are sufficient, the answer as "Final answer: ...".

Question: What is the birth day of Rain Wilson' father?
Step: The father of Rain Wilson is Robert Wilson.
Step: Robert Wilson was born on June 24, 1941.
Final answer: June 24, 1941

Question: Who is the paternal grandfather of John Smith?
Step: The father of John Smith is David Smith.
Step: The father of David Smith is George Smith.
Final answer: George Smith

Question: What is the capital city of the country of citizenship of Ivanka Trump's spouse?
Step: The spouse of Ivanka Trump is Jared Kushner.
Step: The country of citizenship of Jared Kushner is the United States of America.
Step: The capital city of the United States of America is Washington, D.C.
Final answer: Washington, D.C.

Question: Do both Django Unchained and Rango films have the directors from the same country?
Step: The director of Django Unchained is Quentin Tarantino.
Step: The director of Rango is Gore Verbinski.
Step: The country of citizenship of Quentin Tarantino is the United States of America.
Step: The country of citizenship of Gore Verbinski is the United States of America.
Final answer: Yes

Question: Which film has the director who died first, Love in the AfterNoon or Gigi?
Step: The director of Love in the AfterNoon is Billy Wilder.
Step: The director of Gigi is Vincente Minnelli.
Step: Billy Wilder died on March 27, 2002.
Step: Vincente Minnelli died on July 25, 1986.
Final answer: Gigi

Question: {Thought}
)";

const char* kKcdRefine =
    R"(Reference: {Paragraph}
Statement: {Statement}
Rewrite the statement so that it is consistent with the reference. Keep the shape of the claim, replace any entity or value that the reference contradicts or does not support, and answer strictly from the reference. If the reference is empty or does not cover the claim, reply with "Cannot verify." followed by the original statement. Reply with one sentence.
Refined:)";

const char* kFinalAnswer =
    R"(Using the reasoning below, answer the original question. Reply with exactly one line in the form "Final answer: ...".

{Thought}
Final answer:)";

const char* kFewshotQuestions =
    R"(What is the birth day of Rain Wilson' father?
Who is the paternal grandfather of John Smith?
What is the capital city of the country of citizenship of Ivanka Trump's spouse?
Do both Django Unchained and Rango films have the directors from the same country?
Which film has the director who died first, Love in the AfterNoon or Gigi?
)";

const char* kPaddingText =
    R"(The orchard keeps its own calendar. Long before the first frost settles on the fence rails, the trees begin to pull their sugar inward, and the leaves give up their green a row at a time. A person walking the rows in early autumn can read the progress of the season by smell alone: windfall apples souring in the grass, woodsmoke drifting from the far cottages, and the cold mineral scent of the creek running low between its stones. The pickers arrive when the light turns amber in the afternoons. They work in pairs, one on the ladder and one below with the basket, trading places when their shoulders tire. Nobody hurries. The fruit decides the pace, and the fruit has never once been argued out of its schedule. At midday the crew gathers under the old pear tree at the end of the lane, where the grass stays flat from years of the same gathering. Bread is passed around, and cider from the previous year, and the talk runs to weather, to the stubborn gate by the lower field, to whose turn it is to mend the press. When the wind rises the whole orchard answers it, branch by branch, a slow green applause that carries over the hedgerows and down to the road. Evening comes earlier each week. The baskets are counted and carried to the barn, the ladders folded against the wall, and the dogs make one last circuit of the fence line before following the lanterns home. In the dark the orchard goes on with its quiet work, turning rain and patience into next season, as it has done for longer than anyone now living can remember, and as it will go on doing long after the present company has handed its ladders to other hands. The ledger of the place is kept in rings and roots rather than in ink, and it has never yet been found in error.)";

}  // namespace

const std::string& decompose_prompt() {
  static const std::string body(kDecompose);
  return body;
}

const std::string& extract_fact_prompt() {
  static const std::string body(kExtractFact);
  return body;
}

const std::string& kcd_step_prompt() {
  static const std::string body(kKcdStep);
  return body;
}

const std::string& kcd_refine_prompt() {
  static const std::string body(kKcdRefine);
  return body;
}

const std::string& final_answer_prompt() {
  static const std::string body(kFinalAnswer);
  return body;
}

const std::string& fewshot_questions() {
  static const std::string body(kFewshotQuestions);
  return body;
}

const std::string& default_padding_text() {
  static const std::string body(kPaddingText);
  return body;
}

}  // namespace longhop::assets
