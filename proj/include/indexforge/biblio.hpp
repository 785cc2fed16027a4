#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "indexforge/common.hpp"

namespace indexforge {

struct AuthorRecord {
    std::string name;
    std::string given_name;
    std::optional<std::string> affiliation_country;  // alpha-3
};

struct PublicationRecord {
    std::string id;
    std::string title;
    std::string venue;
    int year = 0;
    std::vector<AuthorRecord> authors;
};

using Corpus = std::vector<PublicationRecord>;

/// Keywords and (for the AI topic) venue names/abbreviations driving
/// classification. Topic ids: "AI", "Governance", "Safety", "SDG1".."SDG17".
struct TopicKeywordSet {
    std::string topic;
    std::vector<std::string> keywords;  // lower-cased phrases
    std::vector<std::string> venues;    // AI topic only
};

enum class Gender { Male, Female, Unknown };

using GenderDict = std::map<std::string, Gender>;  // case-folded given name -> gender

struct GenderCounts {
    long male = 0;
    long female = 0;
    long unknown = 0;
    double alpha = 0.229;  // fraction of unknowns allocated female
};

struct GenderRatio {
    std::optional<double> male_to_female;  // absent when adjusted female count is 0
    double female_share = 0.0;
};

/// JSON lines, one record per line:
/// {id, title, venue, year, authors:[{name, given_name, affiliation_country?}]}
Corpus load_corpus(const std::string& text);

/// JSON document {"topics":[{topic, keywords:[...], venues:[...]}]}.
std::vector<TopicKeywordSet> load_keyword_sets(const std::string& document);

/// `given_name,gender` rows, gender in {M, F} (case-insensitive; also accepts
/// Male/Female).
GenderDict load_gender_dict(const std::string& text);

/// Case-insensitive whole-word substring match of `needle` (possibly a multi
/// word phrase) inside `haystack`.
bool contains_keyword(const std::string& haystack, const std::string& needle);

/// Dual filter: the venue appears in the AI venue catalog, OR the title
/// matches any AI keyword.
bool classify_ai(const PublicationRecord& rec, const TopicKeywordSet& ai_set);

/// Title keyword tagging, independent per topic. The AI set itself is skipped
/// (AI-relatedness is the caller's gate).
std::set<std::string> classify_topics(const PublicationRecord& rec,
                                      const std::vector<TopicKeywordSet>& sets);

/// Affiliation wins; otherwise the modal affiliation country among co-authors
/// across the corpus; ties or no data yield absent. Authors are identified by
/// exact name (no cross-record disambiguation).
std::optional<std::string> infer_country(const AuthorRecord& author, const Corpus& corpus);

/// Two-phase resolution for whole corpora: build the collaboration graph
/// once, then resolve every author name.
std::map<std::string, std::optional<std::string>> resolve_countries(const Corpus& corpus);

Gender infer_gender(const std::string& given_name, const GenderDict& dict);

/// F' = female + alpha*unknown, M' = male + (1-alpha)*unknown;
/// ratio = M'/F' (absent when F' == 0), share = F'/(M'+F').
GenderRatio adjusted_gender_ratio(const GenderCounts& c);

using CountryPairCounts = std::map<std::pair<std::string, std::string>, long>;

/// Per publication, each unordered pair of distinct author countries counts
/// once; single-country publications contribute nothing. Keys are stored with
/// the lexicographically smaller code first.
CountryPairCounts coauthorship_matrix(
    const Corpus& corpus, const std::map<std::string, std::optional<std::string>>& country_of);

struct SdgDistribution {
    // counts[country][topic] = publications from that country tagged with the goal
    std::map<std::string, std::map<std::string, long>> counts;
    // share of each goal within the grouping's total tag count
    std::map<std::string, std::map<std::string, double>> shares;
};

/// Counts AI-related publications per country per SDG (multi-tag allowed; a
/// publication counts once for each distinct author country). `grouping`
/// optionally folds countries into groups before shares are computed.
SdgDistribution sdg_distribution(const Corpus& corpus, const std::vector<TopicKeywordSet>& sets,
                                 const std::map<std::string, std::optional<std::string>>& country_of,
                                 const std::map<std::string, std::string>* grouping = nullptr);

}  // namespace indexforge
