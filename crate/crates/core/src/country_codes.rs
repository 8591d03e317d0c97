//! ISO 3166-1 alpha-2 codes keyed by country name, with the alternate
//! spellings that appear in EM-DAT exports.

pub(crate) static COUNTRY_NAMES: &[(&str, &str)] = &[
    ("Andorra", "AD"),
    ("Principality of Andorra", "AD"),
    ("United Arab Emirates", "AE"),
    ("United Arab Emirates (the)", "AE"),
    ("Afghanistan", "AF"),
    ("Islamic Republic of Afghanistan", "AF"),
    ("Antigua and Barbuda", "AG"),
    ("Anguilla", "AI"),
    ("Albania", "AL"),
    ("Republic of Albania", "AL"),
    ("Armenia", "AM"),
    ("Republic of Armenia", "AM"),
    ("Angola", "AO"),
    ("Republic of Angola", "AO"),
    ("Antarctica", "AQ"),
    ("Argentina", "AR"),
    ("Argentine Republic", "AR"),
    ("American Samoa", "AS"),
    ("Austria", "AT"),
    ("Republic of Austria", "AT"),
    ("Australia", "AU"),
    ("Aruba", "AW"),
    ("Åland Islands", "AX"),
    ("Azerbaijan", "AZ"),
    ("Republic of Azerbaijan", "AZ"),
    ("Bosnia and Herzegovina", "BA"),
    ("Republic of Bosnia and Herzegovina", "BA"),
    ("Barbados", "BB"),
    ("Bangladesh", "BD"),
    ("People's Republic of Bangladesh", "BD"),
    ("Belgium", "BE"),
    ("Kingdom of Belgium", "BE"),
    ("Burkina Faso", "BF"),
    ("Bulgaria", "BG"),
    ("Republic of Bulgaria", "BG"),
    ("Bahrain", "BH"),
    ("Kingdom of Bahrain", "BH"),
    ("Burundi", "BI"),
    ("Republic of Burundi", "BI"),
    ("Benin", "BJ"),
    ("Republic of Benin", "BJ"),
    ("Saint Barthélemy", "BL"),
    ("Bermuda", "BM"),
    ("Brunei Darussalam", "BN"),
    ("Brunei", "BN"),
    ("Bolivia, Plurinational State of", "BO"),
    ("Plurinational State of Bolivia", "BO"),
    ("Bolivia", "BO"),
    ("Bolivia (Plurinational State of)", "BO"),
    ("Bonaire, Sint Eustatius and Saba", "BQ"),
    ("Brazil", "BR"),
    ("Federative Republic of Brazil", "BR"),
    ("Bahamas", "BS"),
    ("Commonwealth of the Bahamas", "BS"),
    ("Bahamas (the)", "BS"),
    ("Bhutan", "BT"),
    ("Kingdom of Bhutan", "BT"),
    ("Bouvet Island", "BV"),
    ("Botswana", "BW"),
    ("Republic of Botswana", "BW"),
    ("Belarus", "BY"),
    ("Republic of Belarus", "BY"),
    ("Belize", "BZ"),
    ("Canada", "CA"),
    ("Cocos (Keeling) Islands", "CC"),
    ("Congo, The Democratic Republic of the", "CD"),
    ("Congo (the Democratic Republic of the)", "CD"),
    ("Democratic Republic of the Congo", "CD"),
    ("DR Congo", "CD"),
    ("Zaire", "CD"),
    ("Central African Republic", "CF"),
    ("Central African Republic (the)", "CF"),
    ("Congo", "CG"),
    ("Republic of the Congo", "CG"),
    ("Congo (the)", "CG"),
    ("Switzerland", "CH"),
    ("Swiss Confederation", "CH"),
    ("Côte d'Ivoire", "CI"),
    ("Republic of Côte d'Ivoire", "CI"),
    ("Cote d'Ivoire", "CI"),
    ("Côte d’Ivoire", "CI"),
    ("Ivory Coast", "CI"),
    ("Cook Islands", "CK"),
    ("Cook Islands (the)", "CK"),
    ("Chile", "CL"),
    ("Republic of Chile", "CL"),
    ("Cameroon", "CM"),
    ("Republic of Cameroon", "CM"),
    ("China", "CN"),
    ("People's Republic of China", "CN"),
    ("Colombia", "CO"),
    ("Republic of Colombia", "CO"),
    ("Costa Rica", "CR"),
    ("Republic of Costa Rica", "CR"),
    ("Cuba", "CU"),
    ("Republic of Cuba", "CU"),
    ("Cabo Verde", "CV"),
    ("Republic of Cabo Verde", "CV"),
    ("Cape Verde", "CV"),
    ("Curaçao", "CW"),
    ("Christmas Island", "CX"),
    ("Cyprus", "CY"),
    ("Republic of Cyprus", "CY"),
    ("Czechia", "CZ"),
    ("Czech Republic", "CZ"),
    ("Czech Republic (the)", "CZ"),
    ("Germany", "DE"),
    ("Federal Republic of Germany", "DE"),
    ("Djibouti", "DJ"),
    ("Republic of Djibouti", "DJ"),
    ("Denmark", "DK"),
    ("Kingdom of Denmark", "DK"),
    ("Dominica", "DM"),
    ("Commonwealth of Dominica", "DM"),
    ("Dominican Republic", "DO"),
    ("Dominican Republic (the)", "DO"),
    ("Algeria", "DZ"),
    ("People's Democratic Republic of Algeria", "DZ"),
    ("Ecuador", "EC"),
    ("Republic of Ecuador", "EC"),
    ("Estonia", "EE"),
    ("Republic of Estonia", "EE"),
    ("Egypt", "EG"),
    ("Arab Republic of Egypt", "EG"),
    ("Western Sahara", "EH"),
    ("Eritrea", "ER"),
    ("the State of Eritrea", "ER"),
    ("Spain", "ES"),
    ("Kingdom of Spain", "ES"),
    ("Ethiopia", "ET"),
    ("Federal Democratic Republic of Ethiopia", "ET"),
    ("Finland", "FI"),
    ("Republic of Finland", "FI"),
    ("Fiji", "FJ"),
    ("Republic of Fiji", "FJ"),
    ("Falkland Islands (Malvinas)", "FK"),
    ("Micronesia, Federated States of", "FM"),
    ("Federated States of Micronesia", "FM"),
    ("Micronesia (Federated States of)", "FM"),
    ("Faroe Islands", "FO"),
    ("France", "FR"),
    ("French Republic", "FR"),
    ("Gabon", "GA"),
    ("Gabonese Republic", "GA"),
    ("United Kingdom", "GB"),
    ("United Kingdom of Great Britain and Northern Ireland", "GB"),
    ("United Kingdom of Great Britain and Northern Ireland (the)", "GB"),
    ("Grenada", "GD"),
    ("Georgia", "GE"),
    ("French Guiana", "GF"),
    ("Guernsey", "GG"),
    ("Ghana", "GH"),
    ("Republic of Ghana", "GH"),
    ("Gibraltar", "GI"),
    ("Greenland", "GL"),
    ("Gambia", "GM"),
    ("Republic of the Gambia", "GM"),
    ("Gambia (the)", "GM"),
    ("Guinea", "GN"),
    ("Republic of Guinea", "GN"),
    ("Guadeloupe", "GP"),
    ("Equatorial Guinea", "GQ"),
    ("Republic of Equatorial Guinea", "GQ"),
    ("Greece", "GR"),
    ("Hellenic Republic", "GR"),
    ("South Georgia and the South Sandwich Islands", "GS"),
    ("Guatemala", "GT"),
    ("Republic of Guatemala", "GT"),
    ("Guam", "GU"),
    ("Guinea-Bissau", "GW"),
    ("Republic of Guinea-Bissau", "GW"),
    ("Guyana", "GY"),
    ("Republic of Guyana", "GY"),
    ("Hong Kong", "HK"),
    ("Hong Kong Special Administrative Region of China", "HK"),
    ("Heard Island and McDonald Islands", "HM"),
    ("Honduras", "HN"),
    ("Republic of Honduras", "HN"),
    ("Croatia", "HR"),
    ("Republic of Croatia", "HR"),
    ("Haiti", "HT"),
    ("Republic of Haiti", "HT"),
    ("Hungary", "HU"),
    ("Indonesia", "ID"),
    ("Republic of Indonesia", "ID"),
    ("Ireland", "IE"),
    ("Israel", "IL"),
    ("State of Israel", "IL"),
    ("Isle of Man", "IM"),
    ("India", "IN"),
    ("Republic of India", "IN"),
    ("British Indian Ocean Territory", "IO"),
    ("Iraq", "IQ"),
    ("Republic of Iraq", "IQ"),
    ("Iran, Islamic Republic of", "IR"),
    ("Islamic Republic of Iran", "IR"),
    ("Iran", "IR"),
    ("Iran (Islamic Republic of)", "IR"),
    ("Iceland", "IS"),
    ("Republic of Iceland", "IS"),
    ("Italy", "IT"),
    ("Italian Republic", "IT"),
    ("Jersey", "JE"),
    ("Jamaica", "JM"),
    ("Jordan", "JO"),
    ("Hashemite Kingdom of Jordan", "JO"),
    ("Japan", "JP"),
    ("Kenya", "KE"),
    ("Republic of Kenya", "KE"),
    ("Kyrgyzstan", "KG"),
    ("Kyrgyz Republic", "KG"),
    ("Cambodia", "KH"),
    ("Kingdom of Cambodia", "KH"),
    ("Kiribati", "KI"),
    ("Republic of Kiribati", "KI"),
    ("Comoros", "KM"),
    ("Union of the Comoros", "KM"),
    ("Comoros (the)", "KM"),
    ("Saint Kitts and Nevis", "KN"),
    ("Korea, Democratic People's Republic of", "KP"),
    ("Democratic People's Republic of Korea", "KP"),
    ("North Korea", "KP"),
    ("Korea (the Democratic People's Republic of)", "KP"),
    ("Korea, Republic of", "KR"),
    ("South Korea", "KR"),
    ("Korea (the Republic of)", "KR"),
    ("Kuwait", "KW"),
    ("State of Kuwait", "KW"),
    ("Cayman Islands", "KY"),
    ("Cayman Islands (the)", "KY"),
    ("Kazakhstan", "KZ"),
    ("Republic of Kazakhstan", "KZ"),
    ("Lao People's Democratic Republic", "LA"),
    ("Laos", "LA"),
    ("Lao People's Democratic Republic (the)", "LA"),
    ("Lebanon", "LB"),
    ("Lebanese Republic", "LB"),
    ("Saint Lucia", "LC"),
    ("Liechtenstein", "LI"),
    ("Principality of Liechtenstein", "LI"),
    ("Sri Lanka", "LK"),
    ("Democratic Socialist Republic of Sri Lanka", "LK"),
    ("Liberia", "LR"),
    ("Republic of Liberia", "LR"),
    ("Lesotho", "LS"),
    ("Kingdom of Lesotho", "LS"),
    ("Lithuania", "LT"),
    ("Republic of Lithuania", "LT"),
    ("Luxembourg", "LU"),
    ("Grand Duchy of Luxembourg", "LU"),
    ("Latvia", "LV"),
    ("Republic of Latvia", "LV"),
    ("Libya", "LY"),
    ("Morocco", "MA"),
    ("Kingdom of Morocco", "MA"),
    ("Monaco", "MC"),
    ("Principality of Monaco", "MC"),
    ("Moldova, Republic of", "MD"),
    ("Republic of Moldova", "MD"),
    ("Moldova", "MD"),
    ("Moldova (the Republic of)", "MD"),
    ("Montenegro", "ME"),
    ("Saint Martin (French part)", "MF"),
    ("Saint Martin (French Part)", "MF"),
    ("Madagascar", "MG"),
    ("Republic of Madagascar", "MG"),
    ("Marshall Islands", "MH"),
    ("Republic of the Marshall Islands", "MH"),
    ("Marshall Islands (the)", "MH"),
    ("North Macedonia", "MK"),
    ("Republic of North Macedonia", "MK"),
    ("Macedonia (the former Yugoslav Republic of)", "MK"),
    ("Mali", "ML"),
    ("Republic of Mali", "ML"),
    ("Myanmar", "MM"),
    ("Republic of Myanmar", "MM"),
    ("Burma", "MM"),
    ("Mongolia", "MN"),
    ("Macao", "MO"),
    ("Macao Special Administrative Region of China", "MO"),
    ("Macau", "MO"),
    ("Northern Mariana Islands", "MP"),
    ("Commonwealth of the Northern Mariana Islands", "MP"),
    ("Martinique", "MQ"),
    ("Mauritania", "MR"),
    ("Islamic Republic of Mauritania", "MR"),
    ("Montserrat", "MS"),
    ("Malta", "MT"),
    ("Republic of Malta", "MT"),
    ("Mauritius", "MU"),
    ("Republic of Mauritius", "MU"),
    ("Maldives", "MV"),
    ("Republic of Maldives", "MV"),
    ("Malawi", "MW"),
    ("Republic of Malawi", "MW"),
    ("Mexico", "MX"),
    ("United Mexican States", "MX"),
    ("Malaysia", "MY"),
    ("Mozambique", "MZ"),
    ("Republic of Mozambique", "MZ"),
    ("Namibia", "NA"),
    ("Republic of Namibia", "NA"),
    ("New Caledonia", "NC"),
    ("Niger", "NE"),
    ("Republic of the Niger", "NE"),
    ("Niger (the)", "NE"),
    ("Norfolk Island", "NF"),
    ("Nigeria", "NG"),
    ("Federal Republic of Nigeria", "NG"),
    ("Nicaragua", "NI"),
    ("Republic of Nicaragua", "NI"),
    ("Netherlands", "NL"),
    ("Kingdom of the Netherlands", "NL"),
    ("Netherlands (the)", "NL"),
    ("Norway", "NO"),
    ("Kingdom of Norway", "NO"),
    ("Nepal", "NP"),
    ("Federal Democratic Republic of Nepal", "NP"),
    ("Nauru", "NR"),
    ("Republic of Nauru", "NR"),
    ("Niue", "NU"),
    ("New Zealand", "NZ"),
    ("Oman", "OM"),
    ("Sultanate of Oman", "OM"),
    ("Panama", "PA"),
    ("Republic of Panama", "PA"),
    ("Peru", "PE"),
    ("Republic of Peru", "PE"),
    ("French Polynesia", "PF"),
    ("Papua New Guinea", "PG"),
    ("Independent State of Papua New Guinea", "PG"),
    ("Philippines", "PH"),
    ("Republic of the Philippines", "PH"),
    ("Philippines (the)", "PH"),
    ("Pakistan", "PK"),
    ("Islamic Republic of Pakistan", "PK"),
    ("Poland", "PL"),
    ("Republic of Poland", "PL"),
    ("Saint Pierre and Miquelon", "PM"),
    ("Pitcairn", "PN"),
    ("Puerto Rico", "PR"),
    ("Palestine, State of", "PS"),
    ("the State of Palestine", "PS"),
    ("Palestine", "PS"),
    ("Portugal", "PT"),
    ("Portuguese Republic", "PT"),
    ("Palau", "PW"),
    ("Republic of Palau", "PW"),
    ("Paraguay", "PY"),
    ("Republic of Paraguay", "PY"),
    ("Qatar", "QA"),
    ("State of Qatar", "QA"),
    ("Réunion", "RE"),
    ("Reunion", "RE"),
    ("Romania", "RO"),
    ("Serbia", "RS"),
    ("Republic of Serbia", "RS"),
    ("Russian Federation", "RU"),
    ("Russian Federation (the)", "RU"),
    ("Russia", "RU"),
    ("Rwanda", "RW"),
    ("Rwandese Republic", "RW"),
    ("Saudi Arabia", "SA"),
    ("Kingdom of Saudi Arabia", "SA"),
    ("Solomon Islands", "SB"),
    ("Seychelles", "SC"),
    ("Republic of Seychelles", "SC"),
    ("Sudan", "SD"),
    ("Republic of the Sudan", "SD"),
    ("Sudan (the)", "SD"),
    ("Sweden", "SE"),
    ("Kingdom of Sweden", "SE"),
    ("Singapore", "SG"),
    ("Republic of Singapore", "SG"),
    ("Saint Helena, Ascension and Tristan da Cunha", "SH"),
    ("Slovenia", "SI"),
    ("Republic of Slovenia", "SI"),
    ("Svalbard and Jan Mayen", "SJ"),
    ("Slovakia", "SK"),
    ("Slovak Republic", "SK"),
    ("Sierra Leone", "SL"),
    ("Republic of Sierra Leone", "SL"),
    ("San Marino", "SM"),
    ("Republic of San Marino", "SM"),
    ("Senegal", "SN"),
    ("Republic of Senegal", "SN"),
    ("Somalia", "SO"),
    ("Federal Republic of Somalia", "SO"),
    ("Suriname", "SR"),
    ("Republic of Suriname", "SR"),
    ("South Sudan", "SS"),
    ("Republic of South Sudan", "SS"),
    ("Sao Tome and Principe", "ST"),
    ("Democratic Republic of Sao Tome and Principe", "ST"),
    ("El Salvador", "SV"),
    ("Republic of El Salvador", "SV"),
    ("Sint Maarten (Dutch part)", "SX"),
    ("Syrian Arab Republic", "SY"),
    ("Syria", "SY"),
    ("Eswatini", "SZ"),
    ("Kingdom of Eswatini", "SZ"),
    ("Swaziland", "SZ"),
    ("Turks and Caicos Islands", "TC"),
    ("Turks and Caicos Islands (the)", "TC"),
    ("Chad", "TD"),
    ("Republic of Chad", "TD"),
    ("French Southern Territories", "TF"),
    ("Togo", "TG"),
    ("Togolese Republic", "TG"),
    ("Thailand", "TH"),
    ("Kingdom of Thailand", "TH"),
    ("Tajikistan", "TJ"),
    ("Republic of Tajikistan", "TJ"),
    ("Tokelau", "TK"),
    ("Timor-Leste", "TL"),
    ("Democratic Republic of Timor-Leste", "TL"),
    ("Turkmenistan", "TM"),
    ("Tunisia", "TN"),
    ("Republic of Tunisia", "TN"),
    ("Tonga", "TO"),
    ("Kingdom of Tonga", "TO"),
    ("Türkiye", "TR"),
    ("Republic of Türkiye", "TR"),
    ("Turkey", "TR"),
    ("Trinidad and Tobago", "TT"),
    ("Republic of Trinidad and Tobago", "TT"),
    ("Tuvalu", "TV"),
    ("Taiwan, Province of China", "TW"),
    ("Taiwan", "TW"),
    ("Taiwan (Province of China)", "TW"),
    ("Tanzania, United Republic of", "TZ"),
    ("United Republic of Tanzania", "TZ"),
    ("Tanzania", "TZ"),
    ("Ukraine", "UA"),
    ("Uganda", "UG"),
    ("Republic of Uganda", "UG"),
    ("United States Minor Outlying Islands", "UM"),
    ("United States", "US"),
    ("United States of America", "US"),
    ("United States of America (the)", "US"),
    ("USA", "US"),
    ("Uruguay", "UY"),
    ("Eastern Republic of Uruguay", "UY"),
    ("Uzbekistan", "UZ"),
    ("Republic of Uzbekistan", "UZ"),
    ("Holy See (Vatican City State)", "VA"),
    ("Holy See (the)", "VA"),
    ("Saint Vincent and the Grenadines", "VC"),
    ("Venezuela, Bolivarian Republic of", "VE"),
    ("Bolivarian Republic of Venezuela", "VE"),
    ("Venezuela", "VE"),
    ("Venezuela (Bolivarian Republic of)", "VE"),
    ("Virgin Islands, British", "VG"),
    ("British Virgin Islands", "VG"),
    ("Virgin Islands (British)", "VG"),
    ("Virgin Islands, U.S.", "VI"),
    ("Virgin Islands of the United States", "VI"),
    ("Virgin Islands (U.S.)", "VI"),
    ("Viet Nam", "VN"),
    ("Socialist Republic of Viet Nam", "VN"),
    ("Vietnam", "VN"),
    ("Vanuatu", "VU"),
    ("Republic of Vanuatu", "VU"),
    ("Wallis and Futuna", "WF"),
    ("Samoa", "WS"),
    ("Independent State of Samoa", "WS"),
    ("Yemen", "YE"),
    ("Republic of Yemen", "YE"),
    ("Mayotte", "YT"),
    ("South Africa", "ZA"),
    ("Republic of South Africa", "ZA"),
    ("Zambia", "ZM"),
    ("Republic of Zambia", "ZM"),
    ("Zimbabwe", "ZW"),
    ("Republic of Zimbabwe", "ZW"),
];
