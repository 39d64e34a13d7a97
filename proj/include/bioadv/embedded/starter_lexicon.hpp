// Copyright 2026 The bioadv Authors.
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

// Generated copy of data/starter_lexicon.tsv; tests check they match.

#pragma once

#include <string_view>

namespace bioadv::embedded {

inline constexpr std::string_view kStarterLexicon = R"lexicon(# Starter medical lexicon: term<TAB>category<TAB>synonym|synonym|...
# Terms are matched case-insensitively over whitespace tokens. The synonym
# attack only replaces chemical and disease terms; the other categories exist
# so that noise attacks can target them under lexicon-terms targeting.
#!categories chemical disease device procedure condition
heart valve prosthesis	device	prosthetic heart valve|artificial heart valve
treated	procedure	managed|medicated
pregnancy	condition	gestation|gravidity
warfarin	chemical	potassium warfarin
aspirin	chemical	acetylsalicylic acid|ASA
acetaminophen	chemical	paracetamol|APAP
ibuprofen	chemical	isobutylphenylpropionic acid
heparin	chemical	heparin sodium|unfractionated heparin
morphine	chemical	morphine sulfate
cocaine	chemical	benzoylmethylecgonine
lithium	chemical	lithium carbonate
cisplatin	chemical	cis-diamminedichloroplatinum|CDDP
doxorubicin	chemical	adriamycin|hydroxydaunorubicin
haloperidol	chemical	haldol
amiodarone	chemical	amiodarone hydrochloride
digoxin	chemical	lanoxin|digitalis glycoside
furosemide	chemical	frusemide|lasix
captopril	chemical	capoten
lisinopril	chemical	zestril
metformin	chemical	dimethylbiguanide|glucophage
insulin	chemical	human insulin
prednisone	chemical	deltasone
dexamethasone	chemical	decadron
methotrexate	chemical	amethopterin
cyclophosphamide	chemical	cytoxan|endoxan
tamoxifen	chemical	tamoxifen citrate|nolvadex
vancomycin	chemical	vancomycin hydrochloride
gentamicin	chemical	gentamycin|garamycin
penicillin	chemical	benzylpenicillin|penicillin g
ciprofloxacin	chemical	cipro
fluorouracil	chemical	5-fluorouracil|5-fu
carbamazepine	chemical	tegretol
phenytoin	chemical	diphenylhydantoin|dilantin
valproate	chemical	valproic acid|depakote
diazepam	chemical	valium
lorazepam	chemical	ativan
clonidine	chemical	catapres
propranolol	chemical	inderal
nifedipine	chemical	adalat|procardia
verapamil	chemical	isoptin|calan
caffeine	chemical	1,3,7-trimethylxanthine|guaranine
ethanol	chemical	ethyl alcohol|alcohol
nitroglycerin	chemical	glyceryl trinitrate|nitroglycerine
streptozotocin	chemical	streptozocin|zanosar
isoproterenol	chemical	isoprenaline
theophylline	chemical	1,3-dimethylxanthine
levodopa	chemical	l-dopa|l-3,4-dihydroxyphenylalanine
reserpine	chemical	serpasil
indomethacin	chemical	indometacin|indocin
cyclosporine	chemical	ciclosporin|cyclosporin a
tacrolimus	chemical	fk506|prograf
ketamine	chemical	ketalar
fentanyl	chemical	sublimaze
naloxone	chemical	narcan
clozapine	chemical	clozaril
risperidone	chemical	risperdal
sodium chloride	chemical	saline|table salt
potassium chloride	chemical	kcl
magnesium sulfate	chemical	epsom salt
glucose	chemical	dextrose|d-glucose
cholesterol	chemical	cholesterin
hypertension	disease	high blood pressure|arterial hypertension
hypotension	disease	low blood pressure
myocardial infarction	disease	heart attack|cardiac infarction
heart failure	disease	cardiac failure|congestive heart failure
arrhythmia	disease	cardiac arrhythmia|dysrhythmia
atrial fibrillation	disease	auricular fibrillation
bradycardia	disease	slow heart rate
tachycardia	disease	rapid heart rate|tachyarrhythmia
stroke	disease	cerebrovascular accident|CVA
seizures	disease	convulsions|fits
epilepsy	disease	seizure disorder
diabetes mellitus	disease	diabetes
hepatitis	disease	liver inflammation
liver injury	disease	hepatotoxicity|hepatic injury
renal failure	disease	kidney failure|renal insufficiency
nephrotoxicity	disease	kidney toxicity|renal toxicity
proteinuria	disease	albuminuria
anemia	disease	anaemia
thrombocytopenia	disease	thrombopenia|low platelet count
neutropenia	disease	neutrocytopenia
leukemia	disease	leukaemia
breast cancer	disease	breast carcinoma|mammary cancer
lung cancer	disease	lung carcinoma|pulmonary carcinoma
tumor	disease	neoplasm|tumour
pain	disease	ache|discomfort
headache	disease	cephalalgia|cephalgia
depression	disease	depressive disorder|major depression
schizophrenia	disease	schizophrenic disorder
parkinson's disease	disease	parkinson disease|paralysis agitans
alzheimer's disease	disease	alzheimer disease|senile dementia
dementia	disease	amentia
psychosis	disease	psychotic disorder
delirium	disease	acute confusional state
nausea	disease	sickness
vomiting	disease	emesis
diarrhea	disease	diarrhoea
asthma	disease	bronchial asthma
pneumonia	disease	pneumonitis|lung inflammation
edema	disease	oedema|dropsy
hemorrhage	disease	haemorrhage|bleeding
thrombosis	disease	thrombus formation|blood clot
pulmonary embolism	disease	lung embolism
obesity	disease	adiposity
hyperkalemia	disease	hyperkalaemia|high potassium
hypokalemia	disease	hypokalaemia|low potassium
rhabdomyolysis	disease	muscle breakdown
neuropathy	disease	peripheral neuropathy|neuropathia
cardiotoxicity	disease	cardiac toxicity|heart toxicity
dyskinesia	disease	dyskinesis
akathisia	disease	acathisia
catalepsy	disease	catalepsia
)lexicon";

}  // namespace bioadv::embedded
