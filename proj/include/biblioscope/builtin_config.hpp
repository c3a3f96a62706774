#pragma once

/* Built-in copies of the editable config tables shipped under data/.
   The files and these strings must stay byte-identical; a test enforces
   that. The lexicon seeds the WoS-style country names (and a few common
   Spanish/Portuguese spellings) and the region table assigns each country
   to one of the six aggregation regions. */

#include <sstream>
#include <string_view>

#include "biblioscope/geography.hpp"

namespace biblioscope {

inline constexpr std::string_view kBuiltinCountriesMap = R"CFG(# countries.map — ALIAS<TAB>COUNTRY
# Alias lookup is case- and accent-insensitive. The canonical name on the
# right must appear in regions.map. Extend freely; one alias per line.
Argentina	Argentina
Bolivia	Bolivia
Brazil	Brazil
Brasil	Brazil
Chile	Chile
Colombia	Colombia
Costa Rica	Costa Rica
Cuba	Cuba
Dominican Rep	Dominican Rep
Dominican Republic	Dominican Rep
Ecuador	Ecuador
El Salvador	El Salvador
Guatemala	Guatemala
Honduras	Honduras
Mexico	Mexico
Nicaragua	Nicaragua
Panama	Panama
Paraguay	Paraguay
Peru	Peru
Puerto Rico	Puerto Rico
Uruguay	Uruguay
Venezuela	Venezuela
Haiti	Haiti
Jamaica	Jamaica
Trinidad & Tobago	Trinidad & Tobago
Trinidad Tobago	Trinidad & Tobago
Trinidad and Tobago	Trinidad & Tobago
Barbados	Barbados
Bahamas	Bahamas
Belize	Belize
Guyana	Guyana
Suriname	Suriname
Grenada	Grenada
Dominica	Dominica
St Lucia	St Lucia
Saint Lucia	St Lucia
St Vincent	St Vincent
Antigua & Barbuda	Antigua & Barbuda
Antigua & Barbu	Antigua & Barbuda
St Kitts & Nevis	St Kitts & Nevis
St Kitts & Nevi	St Kitts & Nevis
Guadeloupe	Guadeloupe
Martinique	Martinique
French Guiana	French Guiana
Aruba	Aruba
Curacao	Curacao
Spain	Spain
Espana	Spain
Portugal	Portugal
Germany	Germany
Deutschland	Germany
France	France
United Kingdom	United Kingdom
England	United Kingdom
Scotland	United Kingdom
Wales	United Kingdom
North Ireland	United Kingdom
Northern Ireland	United Kingdom
UK	United Kingdom
Great Britain	United Kingdom
Italy	Italy
Netherlands	Netherlands
The Netherlands	Netherlands
Holland	Netherlands
Belgium	Belgium
Switzerland	Switzerland
Austria	Austria
Sweden	Sweden
Norway	Norway
Denmark	Denmark
Finland	Finland
Ireland	Ireland
Poland	Poland
Czech Republic	Czech Republic
Czechia	Czech Republic
Slovakia	Slovakia
Hungary	Hungary
Romania	Romania
Bulgaria	Bulgaria
Greece	Greece
Croatia	Croatia
Serbia	Serbia
Slovenia	Slovenia
Ukraine	Ukraine
Russia	Russia
Russian Federation	Russia
Estonia	Estonia
Latvia	Latvia
Lithuania	Lithuania
Iceland	Iceland
Luxembourg	Luxembourg
Malta	Malta
Cyprus	Cyprus
Belarus	Belarus
Moldova	Moldova
Bosnia & Herzegovina	Bosnia & Herzegovina
Bosnia & Herceg	Bosnia & Herzegovina
Bosnia and Herzegovina	Bosnia & Herzegovina
North Macedonia	North Macedonia
Macedonia	North Macedonia
Albania	Albania
Montenegro	Montenegro
Monaco	Monaco
China	China
Peoples R China	China
PR China	China
P R China	China
Japan	Japan
India	India
South Korea	South Korea
Republic of Korea	South Korea
North Korea	North Korea
Taiwan	Taiwan
Singapore	Singapore
Malaysia	Malaysia
Thailand	Thailand
Indonesia	Indonesia
Vietnam	Vietnam
Philippines	Philippines
Pakistan	Pakistan
Bangladesh	Bangladesh
Sri Lanka	Sri Lanka
Iran	Iran
Israel	Israel
Turkey	Turkey
Turkiye	Turkey
Saudi Arabia	Saudi Arabia
United Arab Emirates	United Arab Emirates
U Arab Emirates	United Arab Emirates
Qatar	Qatar
Kuwait	Kuwait
Jordan	Jordan
Lebanon	Lebanon
Iraq	Iraq
Syria	Syria
Kazakhstan	Kazakhstan
Uzbekistan	Uzbekistan
Mongolia	Mongolia
Nepal	Nepal
Myanmar	Myanmar
Cambodia	Cambodia
Oman	Oman
Bahrain	Bahrain
Armenia	Armenia
Azerbaijan	Azerbaijan
Georgia	Georgia
USA	USA
United States	USA
United States of America	USA
Canada	Canada
South Africa	South Africa
Egypt	Egypt
Nigeria	Nigeria
Kenya	Kenya
Morocco	Morocco
Tunisia	Tunisia
Algeria	Algeria
Ethiopia	Ethiopia
Ghana	Ghana
Tanzania	Tanzania
Uganda	Uganda
Cameroon	Cameroon
Senegal	Senegal
Zimbabwe	Zimbabwe
Botswana	Botswana
Mozambique	Mozambique
Angola	Angola
Libya	Libya
Sudan	Sudan
Ivory Coast	Ivory Coast
Cote Ivoire	Ivory Coast
Cote d'Ivoire	Ivory Coast
Zambia	Zambia
Namibia	Namibia
Rwanda	Rwanda
Madagascar	Madagascar
Benin	Benin
Burkina Faso	Burkina Faso
Mali	Mali
Malawi	Malawi
Congo	Congo
DR Congo	DR Congo
Dem Rep Congo	DR Congo
Gabon	Gabon
Mauritius	Mauritius
Australia	Australia
New Zealand	New Zealand
Fiji	Fiji
Papua New Guinea	Papua New Guinea
New Caledonia	New Caledonia
Samoa	Samoa
)CFG";

inline constexpr std::string_view kBuiltinRegionsMap = R"CFG(# regions.map — COUNTRY<TAB>REGION
# Regions: LAC, EUROPE, ASIA, USA_CANADA, AFRICA, OCEANIA.
# Must cover every canonical country of countries.map. Puerto Rico is
# assigned to LAC by default; edit here to override.
Argentina	LAC
Bolivia	LAC
Brazil	LAC
Chile	LAC
Colombia	LAC
Costa Rica	LAC
Cuba	LAC
Dominican Rep	LAC
Ecuador	LAC
El Salvador	LAC
Guatemala	LAC
Honduras	LAC
Mexico	LAC
Nicaragua	LAC
Panama	LAC
Paraguay	LAC
Peru	LAC
Puerto Rico	LAC
Uruguay	LAC
Venezuela	LAC
Haiti	LAC
Jamaica	LAC
Trinidad & Tobago	LAC
Barbados	LAC
Bahamas	LAC
Belize	LAC
Guyana	LAC
Suriname	LAC
Grenada	LAC
Dominica	LAC
St Lucia	LAC
St Vincent	LAC
Antigua & Barbuda	LAC
St Kitts & Nevis	LAC
Guadeloupe	LAC
Martinique	LAC
French Guiana	LAC
Aruba	LAC
Curacao	LAC
Spain	EUROPE
Portugal	EUROPE
Germany	EUROPE
France	EUROPE
United Kingdom	EUROPE
Italy	EUROPE
Netherlands	EUROPE
Belgium	EUROPE
Switzerland	EUROPE
Austria	EUROPE
Sweden	EUROPE
Norway	EUROPE
Denmark	EUROPE
Finland	EUROPE
Ireland	EUROPE
Poland	EUROPE
Czech Republic	EUROPE
Slovakia	EUROPE
Hungary	EUROPE
Romania	EUROPE
Bulgaria	EUROPE
Greece	EUROPE
Croatia	EUROPE
Serbia	EUROPE
Slovenia	EUROPE
Ukraine	EUROPE
Russia	EUROPE
Estonia	EUROPE
Latvia	EUROPE
Lithuania	EUROPE
Iceland	EUROPE
Luxembourg	EUROPE
Malta	EUROPE
Cyprus	EUROPE
Belarus	EUROPE
Moldova	EUROPE
Bosnia & Herzegovina	EUROPE
North Macedonia	EUROPE
Albania	EUROPE
Montenegro	EUROPE
Monaco	EUROPE
China	ASIA
Japan	ASIA
India	ASIA
South Korea	ASIA
North Korea	ASIA
Taiwan	ASIA
Singapore	ASIA
Malaysia	ASIA
Thailand	ASIA
Indonesia	ASIA
Vietnam	ASIA
Philippines	ASIA
Pakistan	ASIA
Bangladesh	ASIA
Sri Lanka	ASIA
Iran	ASIA
Israel	ASIA
Turkey	ASIA
Saudi Arabia	ASIA
United Arab Emirates	ASIA
Qatar	ASIA
Kuwait	ASIA
Jordan	ASIA
Lebanon	ASIA
Iraq	ASIA
Syria	ASIA
Kazakhstan	ASIA
Uzbekistan	ASIA
Mongolia	ASIA
Nepal	ASIA
Myanmar	ASIA
Cambodia	ASIA
Oman	ASIA
Bahrain	ASIA
Armenia	ASIA
Azerbaijan	ASIA
Georgia	ASIA
USA	USA_CANADA
Canada	USA_CANADA
South Africa	AFRICA
Egypt	AFRICA
Nigeria	AFRICA
Kenya	AFRICA
Morocco	AFRICA
Tunisia	AFRICA
Algeria	AFRICA
Ethiopia	AFRICA
Ghana	AFRICA
Tanzania	AFRICA
Uganda	AFRICA
Cameroon	AFRICA
Senegal	AFRICA
Zimbabwe	AFRICA
Botswana	AFRICA
Mozambique	AFRICA
Angola	AFRICA
Libya	AFRICA
Sudan	AFRICA
Ivory Coast	AFRICA
Zambia	AFRICA
Namibia	AFRICA
Rwanda	AFRICA
Madagascar	AFRICA
Benin	AFRICA
Burkina Faso	AFRICA
Mali	AFRICA
Malawi	AFRICA
Congo	AFRICA
DR Congo	AFRICA
Gabon	AFRICA
Mauritius	AFRICA
Australia	OCEANIA
New Zealand	OCEANIA
Fiji	OCEANIA
Papua New Guinea	OCEANIA
New Caledonia	OCEANIA
Samoa	OCEANIA
)CFG";

inline constexpr std::string_view kBuiltinPublisherRules = R"CFG(# publisher_rules.map — PRIORITY<TAB>CLASS<TAB>ROOT[|ROOT...]
# Classes: COMMERCIAL_GENERIC, COMMERCIAL_BRAND, ACADEMIC.
# Roots match as case-insensitive word prefixes of the publisher string;
# among all matching rules the highest priority wins (priorities unique).
# File order is display order for the publisher profile report.
6	COMMERCIAL_GENERIC	Ltd
5	COMMERCIAL_GENERIC	Pub
4	COMMERCIAL_GENERIC	Press
3	COMMERCIAL_GENERIC	Edit
2	COMMERCIAL_GENERIC	Verlag
1	COMMERCIAL_GENERIC	Inc
13	COMMERCIAL_BRAND	Springer
12	COMMERCIAL_BRAND	Elsevier
11	COMMERCIAL_BRAND	Wiley
10	COMMERCIAL_BRAND	Taylor & Francis
9	ACADEMIC	Univ
8	ACADEMIC	Asso|Soc
7	ACADEMIC	Inst
)CFG";

inline CountryLexicon builtin_country_lexicon() {
    std::istringstream in{std::string(kBuiltinCountriesMap)};
    return load_country_lexicon(in, "<builtin countries.map>");
}

inline RegionMap builtin_region_map() {
    std::istringstream in{std::string(kBuiltinRegionsMap)};
    return load_region_map(in, "<builtin regions.map>");
}

} // namespace biblioscope
