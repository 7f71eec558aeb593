#include "claf/harness.hpp"

namespace claf::harness {

// The wording below is the fixed scoring rubric; rewording it changes judge
// behavior, so treat the text as frozen and bump kJudgePromptVersion on edits.
const char* const kJudgePromptTemplate =
    R"(You are tasked with evaluating how well a given response matches the intended audience level. Consider the following audience types and their criteria:


Basic level: This level targets early childhood to elementary school learners. It focuses on providing simplified explanations and structured guidance to support foundational understanding and cognitive growth.
Intermediate level: Geared towards middle and high school students, this level introduces more complex concepts and encourages moderate reasoning. It aims to bridge the gap between basic comprehension and advanced analytical skills, fostering critical thinking and problem-solving abilities.
Advanced level: Designed for undergraduate students and beyond, this level explores complex, abstract concepts that require strong analytical skills. It challenges learners to engage with sophisticated ideas, promoting deep understanding and intellectual development.

Audience Type 0 (Basic level):
Is the response fun and engaging?
Does it use simple knowledge points and avoid complex vocabulary?
Are analogies and metaphors used appropriately?
Is any difficult content explained in simple terms?

Audience Type 1 (Intermediate level):
Does the response provide normal knowledge points?
Is it based on common sense and easily understandable?
Audience Type 2 (Advanced level):
Is the response professional and detailed?
Does it use technical language appropriate for experts in the field?
Question: {question}

Answer for Audience Type 0: {answer_type_0}

Answer for Audience Type 1: {answer_type_1}

Answer for Audience Type 2: {answer_type_2}

Evaluate each response based on how well it aligns with the specified audience type and provide a score out of 100 for each. Output only the scores as numbers.)";

} // namespace claf::harness
