#include "longhop/prompt.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "longhop/assets.hpp"
#include "longhop/error.hpp"

namespace longhop {

namespace {

bool is_placeholder_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_placeholder_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Returns the placeholder name if body[pos] opens one, else empty.
std::string placeholder_at(const std::string& body, std::size_t pos, std::size_t* end) {
  if (body[pos] != '{' || pos + 1 >= body.size() || !is_placeholder_start(body[pos + 1])) {
    return {};
  }
  std::size_t i = pos + 1;
  while (i < body.size() && is_placeholder_char(body[i])) {
    ++i;
  }
  if (i >= body.size() || body[i] != '}') {
    return {};
  }
  *end = i + 1;
  return body.substr(pos + 1, i - pos - 1);
}

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

PromptTemplate::PromptTemplate(std::string name, std::string body)
    : name_(std::move(name)), body_(std::move(body)) {
  for (std::size_t i = 0; i < body_.size(); ++i) {
    if (body_[i] != '{') {
      continue;
    }
    std::size_t end = 0;
    const std::string ph = placeholder_at(body_, i, &end);
    if (!ph.empty()) {
      placeholders_.push_back(ph);
      i = end - 1;
    }
  }
  std::sort(placeholders_.begin(), placeholders_.end());
  placeholders_.erase(std::unique(placeholders_.begin(), placeholders_.end()),
                      placeholders_.end());
}

std::string PromptTemplate::render(const std::map<std::string, std::string>& bindings) const {
  std::string out;
  out.reserve(body_.size());
  for (std::size_t i = 0; i < body_.size();) {
    if (body_[i] == '{') {
      std::size_t end = 0;
      const std::string ph = placeholder_at(body_, i, &end);
      if (!ph.empty()) {
        const auto it = bindings.find(ph);
        if (it == bindings.end()) {
          fail(ErrorCode::Template,
               "template '" + name_ + "' is missing a binding for placeholder {" + ph + "}");
        }
        out.append(it->second);
        i = end;
        continue;
      }
    }
    out.push_back(body_[i]);
    ++i;
  }
  return out;
}

PlannerMove parse_planner_output(const std::string& raw, const MarkerProtocol& markers) {
  const auto lines = split_lines(raw);

  const auto marked = [](const std::string& line, const std::string& marker) -> const char* {
    std::size_t begin = 0;
    while (begin < line.size() && std::isspace(static_cast<unsigned char>(line[begin]))) {
      ++begin;
    }
    if (line.compare(begin, marker.size(), marker) == 0) {
      return line.c_str() + begin + marker.size();
    }
    return nullptr;
  };

  for (const auto& line : lines) {
    if (const char* rest = marked(line, markers.final)) {
      return PlannerMove{PlannerMove::Kind::Final, trim(rest)};
    }
  }
  for (const auto& line : lines) {
    if (const char* rest = marked(line, markers.subquestion)) {
      return PlannerMove{PlannerMove::Kind::Subquestion, trim(rest)};
    }
    if (const char* rest = marked(line, markers.step)) {
      return PlannerMove{PlannerMove::Kind::Step, trim(rest)};
    }
  }
  fail(ErrorCode::UnparseableMove, "no move marker in planner output: " + raw);
}

PromptSet PromptSet::builtin() {
  PromptSet set;
  set.decompose = PromptTemplate("decompose", assets::decompose_prompt());
  set.extract_fact = PromptTemplate("extract_fact", assets::extract_fact_prompt());
  set.kcd_step = PromptTemplate("kcd_step", assets::kcd_step_prompt());
  set.kcd_refine = PromptTemplate("kcd_refine", assets::kcd_refine_prompt());
  set.final_answer = PromptTemplate("final_answer", assets::final_answer_prompt());
  return set;
}

PromptSet PromptSet::from_directory(const std::filesystem::path& dir) {
  PromptSet set = builtin();
  const auto load = [&dir](const char* stem, PromptTemplate* slot) {
    const auto path = dir / (std::string(stem) + ".txt");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      return;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    *slot = PromptTemplate(stem, buf.str());
  };
  load("decompose", &set.decompose);
  load("extract_fact", &set.extract_fact);
  load("kcd_step", &set.kcd_step);
  load("kcd_refine", &set.kcd_refine);
  load("final_answer", &set.final_answer);
  return set;
}

}  // namespace longhop
