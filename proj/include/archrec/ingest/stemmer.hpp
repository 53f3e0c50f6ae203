#ifndef ARCHREC_INGEST_STEMMER_HPP
#define ARCHREC_INGEST_STEMMER_HPP

#include <string>

namespace archrec {

// Porter suffix-stripping stemmer over lowercase ASCII words.
std::string porter_stem(std::string word);

} // namespace archrec

#endif
