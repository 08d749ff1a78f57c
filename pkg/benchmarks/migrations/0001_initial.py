from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SolverRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True, db_index=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
                ('label', models.CharField(help_text='Problem label, e.g. hfe:17,5,1 or a file name', max_length=255)),
                ('algorithm', models.CharField(choices=[('buchberger', 'buchberger'), ('f4', 'f4'), ('fe-f4', 'fe-f4'), ('s-f4', 's-f4'), ('ms-f4', 'ms-f4')], max_length=16)),
                ('order', models.CharField(default='grevlex', max_length=16)),
                ('variables', models.PositiveIntegerField()),
                ('equations', models.PositiveIntegerField()),
                ('c_pair', models.PositiveIntegerField(default=0)),
                ('l_matrix', models.PositiveIntegerField(default=0)),
                ('reductor', models.PositiveIntegerField(default=0)),
                ('round', models.PositiveIntegerField(default=0)),
                ('solved', models.PositiveIntegerField(default=0)),
                ('h_deg_gb', models.PositiveIntegerField(default=0)),
                ('h_deg_gb_unreduced', models.PositiveIntegerField(default=0)),
                ('gb_size', models.PositiveIntegerField(default=0)),
                ('gb_size_unreduced', models.PositiveIntegerField(default=0)),
                ('r_time', models.FloatField(default=0.0, help_text='Seconds spent in Reduction')),
                ('inconsistent', models.BooleanField(default=False)),
                ('verified', models.BooleanField(blank=True, null=True)),
            ],
            options={
                'db_table': 'solver_runs',
                'ordering': ['-created_at'],
                'indexes': [models.Index(fields=['label', 'algorithm'], name='solver_runs_label_algo_idx')],
            },
        ),
    ]
