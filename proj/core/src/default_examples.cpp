// Copyright 2026 The qfs-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfsforge/promptgen.hpp"

namespace qfsforge {
namespace {

// News example: a CNN/DailyMail article with its highlight summary.
const char* const kNewsDocument =
    "BOGOTA, Colombia (CNN) -- A key rebel commander and fugitive from a U.S. drug "
    "trafficking indictment was killed over the weekend in an air attack on a guerrilla "
    "encampment, the Colombian military said Monday. Alleged cocaine trafficker and FARC "
    "rebel Tomas Medina Caracas in an Interpol photo. Tomas Medina Caracas, known "
    "popularly as \"El Negro Acacio,\" was a member of the high command of the Fuerzas "
    "Armadas Revolucionarias de Colombia and, according to Colombian and U.S. officials, "
    "helped manage the group's extensive cocaine trafficking network. He had been in the "
    "cross-hairs of the U.S. Justice Department since 2002. He was charged with "
    "conspiracy to import cocaine into the United States and manufacturing and "
    "distributing cocaine within Colombia to fund the FARC's 42-year insurgency against "
    "the government. U.S. officials alleged Medina Caracas managed the rebel group's "
    "sales of cocaine to international drug traffickers, who in turn smuggled it into "
    "the United States. He was also indicted in the United States along with two other "
    "FARC commanders in November 2002 on charges of conspiring to kidnap two U.S. oil "
    "workers from neighboring Venezuela in 1997 and holding one of them for nine months "
    "until a $1 million ransom was paid. Officials said the army's Rapid Response Force, "
    "backed by elements of the Colombian Air Force, tracked Medina Caracas down at a "
    "FARC camp in the jungle in the south of the country. \"After a bombardment, the "
    "troops occupied the camp, and they've found 14 dead rebels so far, along with "
    "rifles, pistols, communications equipment and ... four GPS systems,\" Defense "
    "Minister Juan Manuel Santos said at a news conference. \"The death of 'El Negro "
    "Acacio' was confirmed by various sources, including members of FARC itself.\" Medina "
    "Caracas commanded FARC's 16th Front in the southern departments of Vichada and "
    "Guainia. Established in 1964 as the military wing of the Colombian Communist Party, "
    "FARC is Colombia's oldest, largest, most capable and best-equipped Marxist rebel "
    "group, according to the U.S. Department of State. E-mail to a friend . Journalist "
    "Fernando Ramos contributed to this report.";

// Dialogue example: a SAMSum chat. Turns are separated by "\r\n" exactly as
// in the source corpus.
const char* const kDialogueDocument =
    "Emma: I\xE2\x80\x99ve just fallen in love with this advent calendar! Awesome! I wanna one for "
    "my kids!\r\nRob: I used to get one every year as a child! Loved them! \r\nEmma: Yeah, i "
    "remember! they were filled with chocolates!\r\nLauren: they are different these days! "
    "much more sophisticated! Haha!\r\nRob: yeah, they can be fabric/ wooden, shop bought/ "
    "homemade, filled with various stuff\r\nEmma: what do you fit inside?\r\nLauren: small "
    "toys, Christmas decorations, creative stuff, hair bands & clips, stickers, pencils "
    "& rubbers, small puzzles, sweets\r\nEmma: WOW! That\xE2\x80\x99s brill! X\r\nLauren: i add one "
    "more very special thing as well- little notes asking my children to do something "
    "nice for someone else\r\nRob: i like that! My sister adds notes asking her kids "
    "questions about christmas such as What did the 3 wise men bring? etc\r\nLauren: i "
    "reckon it prepares them for Christmas \r\nEmma: and makes it more about traditions "
    "and being kind to other people\r\nLauren: my children get very excited every time "
    "they get one!\r\nEmma: i can see why! :)";

const SentenceList kNewsSummary = {
    "Tomas Medina Caracas was a fugitive from a U.S. drug trafficking indictment.",
    "\"El Negro Acacio\" allegedly helped manage extensive cocaine network.",
    "U.S. Justice Department indicted him in 2002.",
    "Colombian military: He was killed in an attack on a guerrilla encampment.",
};

const SentenceList kDialogueSummary = {
    "Emma and Rob love the advent calendar.",
    "Lauren fits inside calendar various items, for instance, small toys and Christmas decorations.",
    "Her children are excited whenever they get the calendar.",
};

const SentenceList kNewsWhQueries = {
    "Who was Tomas Medina Caracas?",
    "What was he indicted for?",
    "When was he indicted?",
    "How did he die?",
};

const SentenceList kNewsYesNoQueries = {
    "Yes: Was Tomas Medina Caracas a fugitive?",
    "No: Did \"El Negro Acacio\" help to fight against drug?",
    "Yes: Was he indicted by U.S. Justice Department?",
    "No: Is he still alive?",
};

const SentenceList kDialogueWhQueries = {
    "What are Emma and Rob's attitude towards advent calendar?",
    "What does Lauren fit inside advent calendar?",
    "What is the reaction of Lauren's children when they get the calendar?",
};

const SentenceList kDialogueYesNoQueries = {
    "Yes: Do Emma and Rob love the advent calendar?",
    "No: Is Lauren unenthusiastic about advent calendar?",
    "Yes: Do Lauren's children enjoy receiving the calendar?",
};

}  // namespace

const OneShotExample& default_example(Domain domain, QueryMode mode) {
  static const OneShotExample kNewsWh{kNewsDocument, kNewsSummary, kNewsWhQueries, Domain::news,
                                      QueryMode::wh};
  static const OneShotExample kNewsYesNo{kNewsDocument, kNewsSummary, kNewsYesNoQueries,
                                         Domain::news, QueryMode::yesno};
  static const OneShotExample kDialogueWh{kDialogueDocument, kDialogueSummary, kDialogueWhQueries,
                                          Domain::dialogue, QueryMode::wh};
  static const OneShotExample kDialogueYesNo{kDialogueDocument, kDialogueSummary,
                                             kDialogueYesNoQueries, Domain::dialogue,
                                             QueryMode::yesno};
  if (domain == Domain::news) return mode == QueryMode::wh ? kNewsWh : kNewsYesNo;
  return mode == QueryMode::wh ? kDialogueWh : kDialogueYesNo;
}

}  // namespace qfsforge
